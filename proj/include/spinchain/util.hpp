#pragma once

#include <cstddef>
#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace spinchain {

// Index-parallel map with deterministic result placement. threads <= 0
// picks the hardware count.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& body);

// CSV writer emitting full double precision (17 significant digits),
// '\n' line endings, no locale dependence.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& header);
  void row(const std::vector<double>& values);
  void raw_row(const std::string& line);

  static std::string format(double v);

 private:
  std::ofstream out_;
};

std::string read_text_file(const std::string& path);

}  // namespace spinchain
