#ifndef GERM_CONTACT_GERM_CONTACT_HPP
#define GERM_CONTACT_GERM_CONTACT_HPP

#include "rational.hpp"
#include "fields.hpp"
#include "upoly.hpp"
#include "polynomial.hpp"
#include "factor.hpp"
#include "number_field.hpp"
#include "curve.hpp"
#include "bivariate.hpp"
#include "puiseux.hpp"
#include "multiplicity.hpp"
#include "type_engine.hpp"
#include "hypersurface.hpp"
#include "parser.hpp"

#endif
