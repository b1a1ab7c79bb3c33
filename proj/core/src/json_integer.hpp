#pragma once

#include "affk/integer.hpp"

#include <cstdint>
#include <limits>

#include <nlohmann/json.hpp>

namespace affk::detail {

/// 64-bit JSON number when it fits, decimal string otherwise.
inline nlohmann::ordered_json integer_json(const Integer& c)
{
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return nlohmann::ordered_json(static_cast<std::int64_t>(c));
    return nlohmann::ordered_json(c.str());
}

}  // namespace affk::detail
