#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "ghz/csv.hpp"
#include "ghz/parameters.hpp"
#include "ghz/sweeps.hpp"

using namespace ghz;

TEST_SUITE("parameters") {

TEST_CASE("defaults and resolution") {
  ProtocolParameters p;
  CHECK_NOTHROW(p.validate());
  const ProtocolConfig cfg = p.resolve();
  CHECK(cfg.target.atoms == 5);
  CHECK(cfg.target.stirap.omega == doctest::Approx(10.0));
  CHECK(cfg.control.omega_c0 == doctest::Approx(pi_pulse_peak(0.1)));
  CHECK(cfg.control.center == doctest::Approx(1.4 + 4 * 1.1));
  CHECK(cfg.t_span.end == doctest::Approx(cfg.control.center + 0.5 + 1.0));
  CHECK(cfg.t_span.start == doctest::Approx(-cfg.t_span.end));

  p.set_text("coupling", "half");
  CHECK(p.resolve().target.stirap.omega == doctest::Approx(5.0));
  p.set("omega_c0", 3.0);
  CHECK(p.resolve().control.omega_c0 == doctest::Approx(3.0));
  p.set_text("coupling", "full");
  CHECK(p.resolve().control.omega_c0 == doctest::Approx(6.0));
  p.set_text("omega_c0", "auto");
  CHECK(p.resolve().control.omega_c0 == doctest::Approx(pi_pulse_peak(0.1)));
}

TEST_CASE("assignment and errors name the key") {
  ProtocolParameters p;
  p.set("gamma", 0.02);
  CHECK(p.gamma_R == 0.02);
  CHECK(p.gamma_r == 0.02);
  p.set("N", 3);
  CHECK(p.get("N") == 3.0);
  CHECK_THROWS_AS(p.set("N", 2.5), ParameterError);

  try {
    p.set("gamma_r", -1.0);
    p.validate();
    FAIL("expected rejection");
  } catch (const ParameterError& e) {
    CHECK(e.key() == "gamma_r");
  }
  try {
    p.set("bogus", 1.0);
    FAIL("expected rejection");
  } catch (const ParameterError& e) {
    CHECK(e.key() == "bogus");
  }
  CHECK_THROWS_AS(p.set_text("coupling", "quarter"), ParameterError);
  CHECK_THROWS_AS(p.set_text("tau", "abc"), ParameterError);
}

TEST_CASE("T_microseconds never touches the dynamics") {
  ProtocolParameters a;
  ProtocolParameters b;
  b.set("T_microseconds", 3.7);
  const ProtocolConfig ca = a.resolve();
  const ProtocolConfig cb = b.resolve();
  CHECK(ca.control.omega_c0 == cb.control.omega_c0);
  CHECK(ca.t_span.end == cb.t_span.end);
  CHECK(b.echo().find("T_microseconds = 3.7") != std::string::npos);
}

}

TEST_SUITE("sweeps") {

TEST_CASE("experiment names") {
  for (auto e : {Experiment::control_transfer, Experiment::stirap_transfer,
                 Experiment::ensemble_decay, Experiment::ghz_fidelity}) {
    CHECK(experiment_from_string(to_string(e)) == e);
  }
  CHECK_THROWS_AS(experiment_from_string("nope"), std::invalid_argument);
}

TEST_CASE("presets") {
  CHECK_THROWS_AS(figure_preset("fig9"), std::invalid_argument);
  const auto fig4 = figure_preset("fig4");
  CHECK(fig4.point_count() == 210);
  CHECK(figure_preset("fig2").point_count() == 2 * 101 * 101);
  CHECK(figure_preset("fig3").point_count() == 2 * 101 * 101);
  CHECK(figure_preset("fig6").point_count() == 100);
  const auto fig7 = figure_preset("fig7");
  CHECK(fig7.per_atoms.at(1).size() == 2);
  CHECK(figure_preset("fig3").base.tau == 1.4);
  const auto ts = figure_timeseries_parameters();
  CHECK(ts.blockade == 500.0);
  CHECK(ts.omega == 5.0);
}

TEST_CASE("single point grid equals a direct call") {
  SweepSpec spec;
  spec.experiment = Experiment::stirap_transfer;
  spec.base.atoms = 2;
  spec.axes = {Axis::list("omega", "omega_T", {4.0})};
  const auto r = run_sweep(spec);
  REQUIRE(r.rows.size() == 1);
  ProtocolParameters direct = spec.base;
  direct.omega = 4.0;
  const auto v = evaluate_point(Experiment::stirap_transfer, direct);
  CHECK(r.rows[0][0] == 4.0);
  CHECK(r.rows[0][1] == v[0]);
  CHECK(r.rows[0][2] == v[1]);
  CHECK(r.columns == std::vector<std::string>{"omega_T", "pop_sN", "pop_gN_plus_sN"});
}

TEST_CASE("row order and determinism") {
  SweepSpec spec;
  spec.experiment = Experiment::control_transfer;
  spec.axes = {Axis::linear("delta_R", "delta_R_T", 0.0, 10.0, 3),
               Axis::linear("omega_c0", "omega_c0_T", 0.0, 20.0, 4)};
  const auto serial = run_sweep(spec, 1);
  const auto parallel = run_sweep(spec, 3);
  REQUIRE(serial.rows.size() == 12);
  CHECK(serial.rows[1][0] == 0.0);
  CHECK(serial.rows[1][1] == doctest::Approx(20.0 / 3));
  CHECK(serial.rows[4][0] == 5.0);
  CHECK(format_csv_body(serial) == format_csv_body(parallel));
  CHECK(format_csv_body(serial) == format_csv_body(run_sweep(spec, 1)));
  for (const auto& row : serial.rows) CHECK(row[2] <= 1.0 + 1e-9);
}

TEST_CASE("failed points become NaN rows") {
  SweepSpec spec;
  spec.experiment = Experiment::ghz_fidelity;
  spec.base.atoms = 1;
  spec.base.omega = 0.0;
  spec.base.samples = 10;
  spec.axes = {Axis::list("Delta", "Delta_T", {100.0})};
  const auto r = run_sweep(spec);
  REQUIRE(r.rows.size() == 1);
  CHECK(std::isnan(r.rows[0][1]));
  CHECK(r.errors.size() == 1);
}

TEST_CASE("invalid specs") {
  SweepSpec spec;
  spec.axes = {Axis::list("nonsense", "x", {1.0})};
  CHECK_THROWS_AS(spec.validate(), ParameterError);
  CHECK_THROWS_AS(Axis::linear("tau", "tau", 0.0, 1.0, 0), std::invalid_argument);
}

}

TEST_SUITE("csv") {

TEST_CASE("round trip") {
  SweepResult r;
  r.columns = {"a", "b"};
  r.rows = {{1.0, 1.0 / 3.0}, {-2.5e-17, std::nan("")}, {1e300, -0.0}};
  r.metadata = {"experiment test", "param N = 5"};
  const std::string text = format_csv(r);
  CHECK(text.find("# experiment test\n") == 0);
  CHECK(text.find('\r') == std::string::npos);
  const auto back = parse_csv(text);
  CHECK(back.columns == r.columns);
  CHECK(back.metadata == r.metadata);
  REQUIRE(back.rows.size() == 3);
  CHECK(back.rows[0][1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(back.rows[1][0] == -2.5e-17);
  CHECK(std::isnan(back.rows[1][1]));
  CHECK(back.rows[2][0] == 1e300);

  const auto path = std::filesystem::temp_directory_path() / "ghzsim_roundtrip.csv";
  write_csv(r, path);
  CHECK(format_csv_body(read_csv(path)) == format_csv_body(r));
  std::filesystem::remove(path);
}

TEST_CASE("io errors carry the path") {
  SweepResult r;
  r.columns = {"a"};
  try {
    write_csv(r, "/nonexistent_dir_ghz/out.csv");
    FAIL("expected failure");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent_dir_ghz/out.csv") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_csv("a,b\n1\n"), std::runtime_error);
}

}
