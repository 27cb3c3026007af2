// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

#ifndef NDSORT_CORE_HPP
#define NDSORT_CORE_HPP

#include "dominance.hpp"
#include "duplicates.hpp"
#include "errors.hpp"
#include "objective_matrix.hpp"
#include "permutation.hpp"
#include "ranks.hpp"

#endif
