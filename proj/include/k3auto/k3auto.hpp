#ifndef K3AUTO_K3AUTO_HPP
#define K3AUTO_K3AUTO_HPP

#include "k3auto/errors.hpp"
#include "k3auto/rational.hpp"
#include "k3auto/polynomial.hpp"
#include "k3auto/cyclotomic.hpp"
#include "k3auto/place.hpp"
#include "k3auto/linalg.hpp"
#include "k3auto/lefschetz.hpp"
#include "k3auto/lattice.hpp"
#include "k3auto/fiber_geometry.hpp"
#include "k3auto/classifier.hpp"
#include "k3auto/weierstrass.hpp"
#include "k3auto/two_torsion.hpp"
#include "k3auto/families.hpp"

#endif  // K3AUTO_K3AUTO_HPP
