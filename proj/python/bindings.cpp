#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "taumackey/criteria.hpp"
#include "taumackey/jobs.hpp"

namespace py = pybind11;
using namespace taumackey;

namespace {

std::pair<GroupPtr, GroupMap> group_and_tau(const std::string& group_json, const std::string& tau_json) {
  const GroupPtr g = group_from_json(Json::parse(group_json));
  return {g, tau_from_json(g, parse_json_argument(tau_json))};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact twisted indicator, simple reducibility and Gelfand pair checks on small finite groups";
  m.attr("__version__") = kToolVersion;
  m.attr("EXIT_OK") = kExitOk;
  m.attr("EXIT_USAGE") = kExitUsage;
  m.attr("EXIT_CROSS_CHECK") = kExitCrossCheck;

  m.def("commands", &known_commands, "Job commands accepted by run_job.");

  m.def(
      "run_job",
      [](const std::string& job_json) {
        JobResult r;
        {
          py::gil_scoped_release release;
          r = run_job(JobSpec::from_json(Json::parse(job_json)));
        }
        return std::make_pair(r.report.dump(), r.exit_code);
      },
      py::arg("job_json"), "Runs one job given as JSON text; returns (report JSON text, exit code).");

  m.def(
      "run_batch",
      [](const std::string& manifest_json, std::optional<std::string> cache_dir, std::size_t workers) {
        BatchOptions options;
        if (cache_dir) options.cache_dir = *cache_dir;
        options.workers = workers;
        BatchResult r;
        {
          py::gil_scoped_release release;
          r = run_batch(Json::parse(manifest_json), options);
        }
        return py::make_tuple(r.report.dump(), r.exit_code, r.cache_hits, r.cache_misses);
      },
      py::arg("manifest_json"), py::arg("cache_dir") = py::none(), py::arg("workers") = 1,
      "Runs a manifest; returns (report JSON text, exit code, cache hits, cache misses).");

  m.def(
      "group_order", [](const std::string& group_json) { return group_from_json(Json::parse(group_json))->order(); },
      py::arg("group_json"));

  m.def(
      "zeta_values",
      [](const std::string& group_json, const std::string& tau_json) {
        const auto [g, tau] = group_and_tau(group_json, tau_json);
        std::vector<std::pair<std::string, std::uint64_t>> out;
        const TwistedCounts z = zeta_tau(*g, tau);
        for (ElementId x = 0; x < g->order(); ++x) out.emplace_back(g->label(x), z.zeta[x]);
        return out;
      },
      py::arg("group_json"), py::arg("tau") = "inverse", "(label, zeta) for every element.");

  m.def(
      "power_sums",
      [](const std::string& group_json, const std::string& tau_json, std::size_t n) {
        const auto [g, tau] = group_and_tau(group_json, tau_json);
        const ConjugacyData cd = conjugacy_classes(*g);
        const TwistedCounts z = zeta_tau(*g, tau);
        return std::make_pair(sum_centralizer_powers(cd, n).str(), sum_zeta_powers(z, n + 1).str());
      },
      py::arg("group_json"), py::arg("tau"), py::arg("n"),
      "(sum of centralizer orders to the n, sum of zeta to the n+1) as decimal strings.");

  static py::exception<Error> error(m, "TaumackeyError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    } catch (const nlohmann::json::exception& e) {
      py::set_error(error, (std::string("InvalidSpec: ") + e.what()).c_str());
    }
  });
}
