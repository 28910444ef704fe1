#ifndef LEIBNIZ_LEIBNIZ_HPP
#define LEIBNIZ_LEIBNIZ_HPP

#include "leibniz/algebra.hpp"
#include "leibniz/classification.hpp"
#include "leibniz/combinatorics.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/elimination.hpp"
#include "leibniz/engel.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/families.hpp"
#include "leibniz/field.hpp"
#include "leibniz/isomorphism.hpp"
#include "leibniz/json_io.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/quadratic.hpp"
#include "leibniz/rational.hpp"
#include "leibniz/suite.hpp"

#endif  // LEIBNIZ_LEIBNIZ_HPP
