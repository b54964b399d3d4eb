#pragma once

#include "f1/arith.hpp"
#include "f1/lattice.hpp"
#include "f1/polyhedral.hpp"
#include "f1/abelian_group.hpp"
#include "f1/hilbert.hpp"
#include "f1/monoid.hpp"
#include "f1/table_monoid.hpp"
#include "f1/spectrum.hpp"
#include "f1/scheme.hpp"
#include "f1/polynomial.hpp"
#include "f1/fan.hpp"
#include "f1/semigroup_ring.hpp"
#include "f1/counting.hpp"
#include "f1/zeta.hpp"
#include "f1/torification.hpp"
#include "f1/cc_triple.hpp"
#include "f1/fzoo.hpp"
#include "f1/io.hpp"
