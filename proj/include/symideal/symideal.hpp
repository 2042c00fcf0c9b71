#pragma once

#include "symideal/error.hpp"
#include "symideal/finite_witness.hpp"
#include "symideal/instance.hpp"
#include "symideal/matrix.hpp"
#include "symideal/monomial.hpp"
#include "symideal/oracle.hpp"
#include "symideal/partitions.hpp"
#include "symideal/permutation.hpp"
#include "symideal/polynomial.hpp"
#include "symideal/scalar.hpp"
