// Output formatting: 17-digit JSON and CSV, atomic file writes.
#pragma once

#include <filesystem>
#include "json.hpp"
#include <string>

#include "dbibps/bounds.hpp"
#include "dbibps/observables.hpp"
#include "dbibps/profile.hpp"

namespace dbibps {

using Json = nlohmann::ordered_json;

// %.17g; non-finite values print as nan/inf.
std::string format_double(double x);

// Serializes with every floating-point number at 17 significant digits.
// Non-finite numbers become null.
std::string dump_json(const Json& j, int indent = 2);

// Writes to a temporary sibling and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

// Header coordinate,field,derivative,energy_density,charge_density.
std::string profile_csv(const SolitonProfile& profile);

Json to_json(const EnergyReport& r);
Json to_json(const BoundCertificate& c);

}  // namespace dbibps
