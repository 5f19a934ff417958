// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graphlab/canonical.hpp"
#include "graphlab/coloring.hpp"
#include "graphlab/cut_norm.hpp"
#include "graphlab/errors.hpp"
#include "graphlab/extended.hpp"
#include "graphlab/family.hpp"
#include "graphlab/forb.hpp"
#include "graphlab/graph.hpp"
#include "graphlab/graph6.hpp"
#include "graphlab/graphon.hpp"
#include "graphlab/graphon_io.hpp"
#include "graphlab/lab.hpp"
#include "graphlab/rational.hpp"
#include "graphlab/report.hpp"
#include "graphlab/rng.hpp"
#include "graphlab/sampler.hpp"
#include "graphlab/subgraph.hpp"
