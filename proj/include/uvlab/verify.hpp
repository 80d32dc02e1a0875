#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uvlab {

struct Bounds {
  int max_atoms = 3;
  int max_poset = 5;
  std::uint64_t seed = 0;
  int jobs = 1;
};

// One line of the verification report.
struct InstanceRecord {
  std::string theorem;
  std::string instance;
  bool pass = false;
  std::string detail;   // failure message, empty when passing
  std::string payload;  // replayable JSON, empty when passing
  std::uint64_t checked = 1;  // instances folded into this record
  double millis = 0.0;
};

struct VerificationRun {
  Bounds bounds;
  std::vector<InstanceRecord> records;
  double total_millis = 0.0;

  bool all_pass() const;
  std::uint64_t total_checked() const;
  std::size_t failures() const;
};

// Runs the whole theorem battery within the bounds.  Deterministic for
// fixed bounds and seed, independent of the job count.
VerificationRun verify_all(const Bounds& bounds);

// Individual theorem sweeps (the acceptance suite drives these directly
// with its own bounds).  Each returns the records it produced.
std::vector<InstanceRecord> run_representation(int max_atoms);
std::vector<InstanceRecord> run_characterization(int max_poset, int jobs,
                                                 std::uint64_t sample_at_6,
                                                 std::uint64_t seed);
std::vector<InstanceRecord> run_collapse(int max_poset, int jobs);
std::vector<InstanceRecord> run_star_neg(int max_poset, int jobs);
std::vector<InstanceRecord> run_figure_two();
std::vector<InstanceRecord> run_functors(int max_atoms);
std::vector<InstanceRecord> run_hyperlocale(int max_atoms);
std::vector<InstanceRecord> run_dictionary(int max_atoms);
std::vector<InstanceRecord> run_sum_product(int max_product_atoms);
std::vector<InstanceRecord> run_applications(int max_atoms);
std::vector<InstanceRecord> run_oracles(int max_atoms, int max_poset);
std::vector<InstanceRecord> run_fault_injection();

// Re-runs the check a failure payload describes.  Returns true when the
// check passes now, false when it fails the same way.
bool replay_payload(const std::string& payload_json, std::string* message);

// Timings are off by default so identical runs emit identical bytes.
std::string records_to_jsonl(const VerificationRun& run,
                             bool include_timings = false);

}  // namespace uvlab
