// Compares the serial reference sweep against the OpenMP fan-out and checks
// that both produce the identical report.
#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ramapoly/render.hpp"
#include "ramapoly/theorems.hpp"

int main(int argc, char** argv) {
  std::uint64_t n_min = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  std::uint64_t n_max = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 200;
  unsigned jobs = argc > 3 ? static_cast<unsigned>(std::atoi(argv[3])) : 0;
  if (jobs == 0) {
#ifdef _OPENMP
    jobs = static_cast<unsigned>(omp_get_max_threads());
#else
    jobs = 1;
#endif
  }

  using clock = std::chrono::steady_clock;
  ramapoly::SuiteConfig cfg;

  auto t0 = clock::now();
  auto serial = ramapoly::run_suite_serial(n_min, n_max, cfg);
  auto t1 = clock::now();
  cfg.jobs = jobs;
  auto parallel = ramapoly::run_suite(n_min, n_max, cfg);
  auto t2 = clock::now();

  double ts = std::chrono::duration<double>(t1 - t0).count();
  double tp = std::chrono::duration<double>(t2 - t1).count();
  std::cout << "range [" << n_min << ", " << n_max << "]\n"
            << "serial   (" << 1 << " job):  " << ts << " s\n"
            << "parallel (" << jobs << " jobs): " << tp << " s\n"
            << "speedup: " << ts / tp << "x\n";

  std::string a = ramapoly::render_report(serial, ramapoly::OutputFormat::Json);
  std::string b =
      ramapoly::render_report(parallel, ramapoly::OutputFormat::Json);
  if (a != b) {
    std::cerr << "reports differ between serial and parallel runs\n";
    return 1;
  }
  std::cout << "reports identical; failures: " << serial.failures() << "\n";
  return serial.failures() == 0 ? 0 : 1;
}
