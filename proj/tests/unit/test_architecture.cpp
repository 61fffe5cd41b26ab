#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

// The simulation layers must not depend on file formats or the CLI.
TEST_CASE("simulation layers do not include io headers") {
  const fs::path root = UBISIM_SOURCE_DIR;
  int scanned = 0;
  for (const char* base : {"include/ubisim", "src"}) {
    for (const char* layer : {"core", "economy", "kernels", "simulation", "sweep"}) {
      const fs::path dir = root / base / layer;
      REQUIRE(fs::is_directory(dir));
      for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::ifstream in(entry.path());
        std::string line;
        while (std::getline(in, line)) {
          if (line.rfind("#include", 0) != 0) continue;
          CHECK_MESSAGE(line.find("ubisim/io") == std::string::npos, entry.path().string());
          CHECK_MESSAGE(line.find("CLI11") == std::string::npos, entry.path().string());
          CHECK_MESSAGE(line.find("nlohmann") == std::string::npos, entry.path().string());
        }
        ++scanned;
      }
    }
  }
  CHECK(scanned > 10);
}
