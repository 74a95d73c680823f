#pragma once

#include "defcol/cnf.hpp"
#include "defcol/coloring.hpp"
#include "defcol/discharging.hpp"
#include "defcol/embedding.hpp"
#include "defcol/gadgets.hpp"
#include "defcol/graph.hpp"
#include "defcol/graph_io.hpp"
#include "defcol/lemmas.hpp"
#include "defcol/report.hpp"
#include "defcol/solver.hpp"
