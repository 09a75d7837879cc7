#pragma once

// Canonical JSON schedule files and verification reports. Serialization
// is byte-deterministic: fixed key order, two-space indentation, integer
// labels only. Parsing validates structure (shapes, ids, ranges) but not
// the closure invariant; that is the verifier's job, so tampered files
// load and then fail verification with a witness.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "decoupling/schedule.hpp"

namespace decoupling {

struct ScheduleDocument {
    PulseSchedule schedule;
    // nullopt = "uniform"; otherwise one positive weight per step.
    std::optional<std::vector<double>> times;
};

std::string schedule_to_json(const PulseSchedule& schedule, bool emit_frames = false);
ScheduleDocument schedule_from_json(const std::string& text);

enum class VerifyMode { automatic, dense, pairwise };

VerifyMode verify_mode_from_name(const std::string& name);

struct VerifyReport {
    std::string scenario;
    std::size_t n = 0;
    std::uint32_t d = 0;
    std::size_t num_steps = 0;
    std::size_t distinct_pulses = 0;
    std::optional<double> residual;  // absent in pairwise mode
    bool pass = false;
    std::vector<std::uint64_t> seeds;
    std::string mode;
    std::string detail;  // witness text, not serialized
};

std::string verify_report_to_json(const VerifyReport& report);

// Structural closure check plus dense residuals (max over seeds) or
// pairwise counting, depending on the mode; auto picks dense exactly when
// the realized dimension fits under dense_cap().
VerifyReport run_verification(const PulseSchedule& schedule,
                              const std::vector<std::uint64_t>& seeds, double tol,
                              VerifyMode mode);

}  // namespace decoupling
