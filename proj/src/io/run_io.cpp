#include "ubisim/io/run_io.hpp"

#include "ubisim/io/grid_io.hpp"

namespace ubisim::io {

std::string period_csv(const SimulationRun& run) {
  std::string out =
      "t,rho_E,share_N,share_0,unmet_fraction,essential_count,nonessential_count,"
      "nonwork_count,unmet_count\n";
  for (std::size_t t = 0; t < run.metrics.size(); ++t) {
    const PeriodMetrics& m = run.metrics[t];
    out += std::to_string(t);
    for (double v : {m.rho_E, m.share_N, m.share_0, m.unmet_fraction}) {
      out += ',';
      out += format_double(v);
    }
    for (std::int64_t c : {m.essential_count, m.nonessential_count, m.nonwork_count, m.unmet_count}) {
      out += ',';
      out += std::to_string(c);
    }
    out += '\n';
  }
  return out;
}

void write_period_csv(const SimulationRun& run, const std::filesystem::path& path) {
  write_text(path, period_csv(run));
}

}  // namespace ubisim::io
