#pragma once

#include <json.hpp>

#include "cspacevis/config_io.hpp"

namespace cspacevis::detail {

using nlohmann::json;

json render_config_to_object(const RenderConfig& cfg);
RenderConfig render_config_from_object(const json& j);

json parse_json(std::string_view text, const char* what);

// Throws InputError naming the first key of `j` not in `allowed`.
void reject_unknown_keys(const json& j, std::initializer_list<std::string_view> allowed,
                         const char* what);

}  // namespace cspacevis::detail
