#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tmt {

// Exact integers everywhere a value can outgrow 64 bits: power sums, defect
// formulas, factor counts with huge block sizes. Never floating point.
using bigint = boost::multiprecision::cpp_int;

}  // namespace tmt
