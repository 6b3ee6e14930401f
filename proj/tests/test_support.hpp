#pragma once

#include "tanvar/properties.hpp"

namespace testing_support {

using tanvar::gen::random_poly;
using tanvar::gen::random_upoly;

}  // namespace testing_support
