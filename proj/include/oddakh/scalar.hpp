#pragma once

#include <gmpxx.h>

namespace oddakh {

using Rational = mpq_class;
using Integer = mpz_class;

}  // namespace oddakh
