#ifndef CHENCHERN_TESTS_SUPPORT_HPP
#define CHENCHERN_TESTS_SUPPORT_HPP

#include "chenchern/sampling.hpp"

namespace chenchern {
namespace fixtures = sampling;
}

#endif  // CHENCHERN_TESTS_SUPPORT_HPP
