#pragma once

#include "frustra/anisotropy.hpp"
#include "frustra/coupling.hpp"
#include "frustra/dynamics.hpp"
#include "frustra/eigen_solver.hpp"
#include "frustra/graph.hpp"
#include "frustra/io.hpp"
#include "frustra/optimize.hpp"
#include "frustra/spin.hpp"
#include "frustra/types.hpp"
