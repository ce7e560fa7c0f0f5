#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "coneval/gamma.hpp"
#include "json.hpp"

namespace coneval {

// Deterministic 64-bit generator (splitmix64).  Small, portable, and
// independent of the standard library's unspecified distributions, so the
// same seed reproduces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform integer in [lo, hi], both ends included.  Requires lo <= hi.
  long range(long lo, long hi);
  // Uniform index into a container of the given nonzero size.
  std::size_t index(std::size_t size);
  // True with probability num/den.
  bool chance(long num, long den);

 private:
  std::uint64_t state_;
};

// Stateless avalanche mix of a 64-bit value.
std::uint64_t mix64(std::uint64_t v);
// Stable per-trial seed: trials are independent, so parallel and serial
// execution of a suite would see identical streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

enum class GenMode {
  RandomRays,
  RandomHalfspaces,
  Subspace,
  PointedFull,
  WithLineality,
  ZeroCone,
  FullSpace,
  Mixed,  // rotates through all of the above
};

// Names: "random-rays", "random-halfspaces", "subspace", "pointed-full",
// "with-lineality", "zero-cone", "full-space", "mixed".
GenMode gen_mode_from_string(const std::string& s);
std::string gen_mode_to_string(GenMode m);

struct GeneratorProfile {
  int dim = 3;             // largest ambient dimension sampled, 1..5
  GenMode mode = GenMode::Mixed;
  int generator_bound = 4;  // most rays / halfspaces per random cone
  long coord_bound = 4;     // largest absolute generator coordinate, <= 8
  std::uint64_t seed = 2026;
};

// One cone drawn from the profile: ambient dimension profile.dim, integer
// generator coordinates bounded by profile.coord_bound, deterministic in
// profile.seed.
Cone random_cone(const GeneratorProfile& profile);
// Same, drawing from an already-running stream.
Cone random_cone(int dim, GenMode mode, int generator_bound, long coord_bound,
                 Rng& rng);

// Rational vector with numerators and denominators bounded by `bound`
// (denominators at least 1), deterministic in `seed`.
QVector random_point(int dim, long bound, std::uint64_t seed);
QVector random_point(int dim, long bound, Rng& rng);

// Fixed low-dimensional shapes every suite runs before its random trials:
// the zero cone, the whole space, coordinate subspaces, rays, halfspaces,
// an orthant, and wedges with and without lineality.
std::vector<Cone> degenerate_catalog(int dim);

// Smallest cone (by deleting generators and moving coordinates toward zero)
// on which `still_fails` stays true.  Candidate edits that throw are skipped.
Cone shrink_cone(const Cone& start,
                 const std::function<bool(const Cone&)>& still_fails);

struct Failure {
  std::string check;        // which property broke
  nlohmann::json details;   // cone, inputs, expected, actual: replayable
};

struct CheckReport {
  std::string suite;
  GeneratorProfile profile;
  int trials = 0;
  std::map<std::string, long> coverage;
  std::vector<Failure> failures;
  bool passed() const { return failures.empty(); }
};

nlohmann::json report_to_json(const CheckReport& r);

// Deliberate bugs, used only to prove the suites can fail (mutation
// sensitivity): flip the per-face sign inside the core sum, or drop the
// slice correction from cut identities.
struct FaultInjection {
  bool flip_face_sign = false;
  bool drop_cut_slice = false;
};

// All suite names in canonical order, excluding the meta-suite "all".
const std::vector<std::string>& suite_names();

// Runs one named suite (or "all") over the degenerate catalog for every
// dimension up to profile.dim plus `trials` random cones.  Identical
// (name, profile, trials, faults) reproduce a byte-identical report.
// Unknown names raise UsageError.
CheckReport run_suite(const std::string& name, const GeneratorProfile& profile,
                      int trials, const FaultInjection& faults = {});

}  // namespace coneval
