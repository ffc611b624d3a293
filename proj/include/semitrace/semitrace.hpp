#ifndef SEMITRACE_SEMITRACE_HPP_
#define SEMITRACE_SEMITRACE_HPP_

#include "enumerate.hpp"
#include "error.hpp"
#include "families.hpp"
#include "ideal.hpp"
#include "integer.hpp"
#include "parallel.hpp"
#include "semigroup.hpp"
#include "shifted.hpp"
#include "threegen.hpp"

#endif  // SEMITRACE_SEMITRACE_HPP_
