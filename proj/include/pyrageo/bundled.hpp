#pragma once

// Data files compiled into the library: the measurement dataset, the claim
// registry and the .geo script corpus. The same files ship under data/.

#include <optional>
#include <span>
#include <string_view>

namespace pyrageo::bundled {

struct Script {
    std::string_view name;  // file name, e.g. "trisection.geo"
    std::string_view source;
};

std::string_view dataset_json();
std::string_view claims_json();
std::span<const Script> scripts();
std::optional<std::string_view> script(std::string_view name);

}  // namespace pyrageo::bundled
