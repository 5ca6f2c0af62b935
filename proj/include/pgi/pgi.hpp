#ifndef PGI_PGI_HPP
#define PGI_PGI_HPP

#include "pgi/abelian.hpp"
#include "pgi/bitset.hpp"
#include "pgi/corpus.hpp"
#include "pgi/errors.hpp"
#include "pgi/family.hpp"
#include "pgi/group.hpp"
#include "pgi/identities.hpp"
#include "pgi/invariants.hpp"
#include "pgi/lattice.hpp"
#include "pgi/numeric.hpp"
#include "pgi/perm.hpp"
#include "pgi/recognizers.hpp"
#include "pgi/report.hpp"
#include "pgi/subgroup.hpp"
#include "pgi/suites.hpp"

#endif
