#include "sta/types.hpp"

#include <string>

namespace sta {

StaVariant parse_variant(std::string_view text) {
  if (text == "original") return StaVariant::Original;
  if (text == "new") return StaVariant::New;
  throw ConfigError("unknown variant '" + std::string(text) + "' (expected original or new)");
}

}  // namespace sta
