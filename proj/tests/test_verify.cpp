#include <doctest.h>

#include "qht/parallel.hpp"
#include "qht/verify.hpp"

using namespace qht;

TEST_SUITE("verify") {

TEST_CASE("trace inequality suite passes") {
  const VerificationReport report = check_trace_inequality(200, 42, {2, 3});
  CHECK(report.failures == 0);
  CHECK(report.worst_margin >= -1e-9);
  CHECK(report.trials == 200);
}

TEST_CASE("chain suite passes") {
  const VerificationReport report = check_chain(200, 7, {2, 3, 4});
  CHECK(report.failures == 0);
  CHECK(report.worst_margin >= -1e-9);
}

TEST_CASE("appendix suite passes") {
  const VerificationReport report = check_appendix(200, 11, {2, 3, 5});
  CHECK(report.failures == 0);
  CHECK(report.worst_margin >= -1e-9);
}

TEST_CASE("tensor counterexample") {
  const VerificationReport report = check_tensor_counterexample();
  CHECK(report.failures == 0);
  CHECK(report.worst_margin >= -1e-9);
}

TEST_CASE("convexity and concavity suite passes") {
  const VerificationReport report = check_convexity_concavity(60, 13);
  CHECK(report.failures == 0);
  CHECK(report.worst_margin >= -1e-9);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  const VerificationReport a = check_chain(100, 1234, {2, 3});
  const VerificationReport b = check_chain(100, 1234, {2, 3});
  CHECK(a.to_string() == b.to_string());
  CHECK(a.worst_margin == b.worst_margin);

  const VerificationReport c = check_chain(100, 1235, {2, 3});
  CHECK(c.worst_margin != a.worst_margin);
}

TEST_CASE("reports are identical across thread counts") {
  const int saved = max_threads();
  set_threads(1);
  const VerificationReport serial = check_trace_inequality(120, 99, {2, 3});
  set_threads(saved > 1 ? saved : 4);
  const VerificationReport parallel = check_trace_inequality(120, 99, {2, 3});
  set_threads(saved);
  CHECK(serial.to_string() == parallel.to_string());
  CHECK(serial.worst_margin == parallel.worst_margin);
}

}  // TEST_SUITE
