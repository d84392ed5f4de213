#pragma once

// Umbrella header: the full library in dependency order.

#include "hypermonad/error.hpp"
#include "hypermonad/ordinal.hpp"
#include "hypermonad/monoid.hpp"
#include "hypermonad/exponent.hpp"
#include "hypermonad/hypergraph.hpp"
#include "hypermonad/calibrated.hpp"
#include "hypermonad/weighted.hpp"
#include "hypermonad/galois.hpp"
#include "hypermonad/parallel.hpp"
#include "hypermonad/cdit.hpp"
#include "hypermonad/state.hpp"
#include "hypermonad/hypergraph_state.hpp"
#include "hypermonad/serialize.hpp"
#include "hypermonad/generate.hpp"
#include "hypermonad/laws.hpp"
#include "hypermonad/state_laws.hpp"
#include "hypermonad/fixtures.hpp"
