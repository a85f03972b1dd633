#ifndef WCIDP_WCIDP_HPP
#define WCIDP_WCIDP_HPP

#include "wcidp/classifier.hpp"
#include "wcidp/enumerator.hpp"
#include "wcidp/expr.hpp"
#include "wcidp/families.hpp"
#include "wcidp/io.hpp"
#include "wcidp/quasismooth.hpp"
#include "wcidp/semigroup.hpp"
#include "wcidp/types.hpp"
#include "wcidp/wellformed.hpp"

#endif  // WCIDP_WCIDP_HPP
