#pragma once

#include "mwis/blowup.hpp"
#include "mwis/bounds.hpp"
#include "mwis/clique_cover.hpp"
#include "mwis/graph.hpp"
#include "mwis/log_io.hpp"
#include "mwis/metis_io.hpp"
#include "mwis/oracle.hpp"
#include "mwis/random.hpp"
#include "mwis/reductions.hpp"
#include "mwis/solver.hpp"
#include "mwis/struction.hpp"
#include "mwis/transform_log.hpp"
#include "mwis/types.hpp"
