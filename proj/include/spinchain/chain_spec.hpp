#pragma once

#include <string>
#include <vector>

namespace spinchain {

// Parameter set of the qubit + open XY chain. Site 0 is the qubit, sites
// 1..N are the environment chain. jx[n], jy[n] couple sites n and n+1
// (n = 0..N-1); fields holds the local fields h_0..h_N, h_0 acting on the
// qubit. Energies are measured in units of the intra-chain coupling J and
// times in 1/J.
struct ChainSpec {
  int n_sites = 0;                 // N, environment length
  std::vector<double> jx;          // J^x_0 .. J^x_{N-1}
  std::vector<double> jy;          // J^y_0 .. J^y_{N-1}
  std::vector<double> fields;      // h_0 .. h_N

  // Uniform XX chain: J_0 between qubit and first spin, J elsewhere,
  // field h on every chain site and h0 on the qubit.
  static ChainSpec uniform(int n, double j, double j0, double h, double h0);

  bool is_xx() const;
  bool is_uniform(double j, double j0, double h, double h0) const;

  // Throws std::invalid_argument on length mismatch or non-finite entries.
  void validate() const;
};

// JSON round trip. Accepts either the explicit form
//   {"n_sites": N, "jx": [...], "jy": [...], "fields": [...]}
// or the shorthand {"uniform": {"J":..,"J0":..,"h":..,"h0":..,"N":..}}.
ChainSpec spec_from_json_text(const std::string& text);
std::string spec_to_json_text(const ChainSpec& spec);

// Same document shape expressed as TOML key/value lines.
ChainSpec spec_from_toml_text(const std::string& text);

}  // namespace spinchain
