#ifndef L1BASIS_L1BASIS_HPP
#define L1BASIS_L1BASIS_HPP

#include "l1basis/basis.hpp"
#include "l1basis/bottleneck.hpp"
#include "l1basis/certificates.hpp"
#include "l1basis/certified.hpp"
#include "l1basis/constructions.hpp"
#include "l1basis/errors.hpp"
#include "l1basis/matrix.hpp"
#include "l1basis/norms.hpp"
#include "l1basis/parallel.hpp"
#include "l1basis/perturbation.hpp"
#include "l1basis/scalar.hpp"
#include "l1basis/unconditional.hpp"

#endif  // L1BASIS_L1BASIS_HPP
