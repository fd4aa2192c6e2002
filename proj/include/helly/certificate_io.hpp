#pragma once

#include <string>

#include "helly/emptiness.hpp"

namespace helly {

// Compact JSON, all integers as decimal strings, keys in sorted order, so
// serialization is deterministic and round trips are bit-exact.
std::string certificate_to_json(const EmptinessCertificate& cert);

// Throws ParseError on malformed input.
EmptinessCertificate certificate_from_json(const std::string& text);

EmptinessCertificate load_certificate(const std::string& path);
void save_certificate(const EmptinessCertificate& cert, const std::string& path);

}  // namespace helly
