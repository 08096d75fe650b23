#ifndef GPEDIM_HASH_HPP
#define GPEDIM_HASH_HPP

#include <string>
#include <string_view>

namespace gpedim {

// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

} // namespace gpedim

#endif
