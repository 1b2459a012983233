#include "spinchain/chain_spec.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "spinchain/config.hpp"

namespace spinchain {

ChainSpec ChainSpec::uniform(int n, double j, double j0, double h, double h0) {
  ChainSpec s;
  s.n_sites = n;
  s.jx.assign(static_cast<std::size_t>(n), j);
  s.jy.assign(static_cast<std::size_t>(n), j);
  if (n > 0) {
    s.jx[0] = j0;
    s.jy[0] = j0;
  }
  s.fields.assign(static_cast<std::size_t>(n) + 1, h);
  s.fields[0] = h0;
  s.validate();
  return s;
}

bool ChainSpec::is_xx() const { return jx == jy; }

bool ChainSpec::is_uniform(double j, double j0, double h, double h0) const {
  if (n_sites < 1) return false;
  if (jx[0] != j0 || jy[0] != j0 || fields[0] != h0) return false;
  for (std::size_t i = 1; i < jx.size(); ++i)
    if (jx[i] != j || jy[i] != j) return false;
  for (std::size_t i = 1; i < fields.size(); ++i)
    if (fields[i] != h) return false;
  return true;
}

void ChainSpec::validate() const {
  if (n_sites < 1) throw std::invalid_argument("ChainSpec: n_sites must be >= 1");
  if (jx.size() != static_cast<std::size_t>(n_sites) ||
      jy.size() != static_cast<std::size_t>(n_sites))
    throw std::invalid_argument("ChainSpec: jx and jy need N entries");
  if (fields.size() != static_cast<std::size_t>(n_sites) + 1)
    throw std::invalid_argument("ChainSpec: fields needs N+1 entries");
  auto finite = [](const std::vector<double>& v) {
    for (double x : v)
      if (!std::isfinite(x)) return false;
    return true;
  };
  if (!finite(jx) || !finite(jy) || !finite(fields))
    throw std::invalid_argument("ChainSpec: non-finite entry");
}

ChainSpec spec_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.contains("uniform")) {
    const auto& u = j.at("uniform");
    return ChainSpec::uniform(u.at("N").get<int>(), u.at("J").get<double>(),
                              u.at("J0").get<double>(), u.at("h").get<double>(),
                              u.at("h0").get<double>());
  }
  ChainSpec s;
  s.n_sites = j.at("n_sites").get<int>();
  s.jx = j.at("jx").get<std::vector<double>>();
  s.jy = j.at("jy").get<std::vector<double>>();
  s.fields = j.at("fields").get<std::vector<double>>();
  s.validate();
  return s;
}

std::string spec_to_json_text(const ChainSpec& spec) {
  nlohmann::json j;
  j["n_sites"] = spec.n_sites;
  j["jx"] = spec.jx;
  j["jy"] = spec.jy;
  j["fields"] = spec.fields;
  return j.dump();
}

ChainSpec spec_from_toml_text(const std::string& text) {
  return spec_from_json_text(toml_subset_to_json(text));
}

}  // namespace spinchain
