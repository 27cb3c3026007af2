// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

#ifndef NDSORT_NDSORT_HPP
#define NDSORT_NDSORT_HPP

#include "baselines.hpp"
#include "bench.hpp"
#include "bitset.hpp"
#include "core.hpp"
#include "generators.hpp"
#include "rank_intersect.hpp"
#include "rank_ordinal.hpp"

#endif
