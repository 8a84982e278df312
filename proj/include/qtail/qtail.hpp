#pragma once

#include "qtail/braid.hpp"
#include "qtail/errors.hpp"
#include "qtail/json.hpp"
#include "qtail/knot_table.hpp"
#include "qtail/qlaurent.hpp"
#include "qtail/series.hpp"
#include "qtail/skein.hpp"
#include "qtail/statesum.hpp"
#include "qtail/tails.hpp"
#include "qtail/torus.hpp"
