#pragma once

#include "certificate.hpp"
#include "coloring.hpp"
#include "correction.hpp"
#include "dot.hpp"
#include "edge_set.hpp"
#include "error.hpp"
#include "factor.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "group.hpp"
#include "odd_incidence.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"
#include "structures.hpp"
