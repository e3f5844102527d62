#include "dbibps/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace dbibps {

namespace {

void write_string(std::ostringstream& os, const std::string& s) {
  os << Json(s).dump();
}

void emit(std::ostringstream& os, const Json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{" << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << "," << nl;
        first = false;
        os << pad;
        write_string(os, it.key());
        os << (indent > 0 ? ": " : ":");
        emit(os, it.value(), indent, depth + 1);
      }
      os << nl << close_pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[" << nl;
      bool first = true;
      for (const auto& item : j) {
        if (!first) os << "," << nl;
        first = false;
        os << pad;
        emit(os, item, indent, depth + 1);
      }
      os << nl << close_pad << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (std::isfinite(x)) {
        os << format_double(x);
      } else {
        os << "null";
      }
      return;
    }
    default:
      os << j.dump();
      return;
  }
}

template <class T>
Json optional_number(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump_json(const Json& j, int indent) {
  std::ostringstream os;
  emit(os, j, indent, 0);
  os << "\n";
  return os.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) {
      f.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

std::string profile_csv(const SolitonProfile& profile) {
  std::string out = "coordinate,field,derivative,energy_density,charge_density\n";
  for (const auto& s : profile.samples) {
    out += format_double(s.coordinate);
    out += ',';
    out += format_double(s.field);
    out += ',';
    out += format_double(s.derivative);
    out += ',';
    out += format_double(s.energy_density);
    out += ',';
    out += format_double(s.charge_density);
    out += '\n';
  }
  return out;
}

Json to_json(const EnergyReport& r) {
  Json j;
  j["energy_quadrature"] = r.energy_quadrature;
  j["energy_closed_form"] = optional_number(r.energy_closed_form);
  j["energy_per_charge_avg"] = optional_number(r.energy_per_charge_avg);
  j["charge"] = r.charge;
  j["rel_discrepancy_closed"] = optional_number(r.rel_discrepancy_closed);
  j["rel_discrepancy_avg"] = optional_number(r.rel_discrepancy_avg);
  return j;
}

Json to_json(const BoundCertificate& c) {
  Json j;
  j["order"] = c.order;
  j["weights"] = c.weights;
  j["alpha"] = optional_number(c.alpha);
  j["constant"] = c.constant;
  j["beta"] = c.beta;
  j["energy_scale"] = c.energy_scale;
  j["samples"] = c.samples;
  j["min_slack"] = optional_number(c.min_slack);
  return j;
}

}  // namespace dbibps
