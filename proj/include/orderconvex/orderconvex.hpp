#pragma once

// Umbrella header: the core library plus the workbench (generators, catalog,
// file formats, DOT export and the analysis pipeline).

#include "orderconvex/element_set.hpp"
#include "orderconvex/error.hpp"
#include "orderconvex/poset.hpp"
#include "orderconvex/join_structure.hpp"
#include "orderconvex/report.hpp"
#include "orderconvex/convexity.hpp"
#include "orderconvex/extremal.hpp"
#include "orderconvex/invariants.hpp"
#include "orderconvex/geometry.hpp"
#include "orderconvex/separation.hpp"
#include "orderconvex/theorems.hpp"
#include "orderconvex/workbench/generators.hpp"
#include "orderconvex/workbench/catalog.hpp"
#include "orderconvex/workbench/io.hpp"
#include "orderconvex/workbench/dot.hpp"
#include "orderconvex/workbench/analysis.hpp"
