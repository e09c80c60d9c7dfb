#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "gabor/json_io.hpp"
#include "oracles.hpp"

using namespace gabor;
using io::json;

namespace {

Rational q(long n, long d = 1) { return Rational(n) / d; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  const Run r = run(std::move(args));
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return json::parse(r.out);
}

const std::string kUpDown = "[[0,2,1],[2,3,-1]]";

}  // namespace

TEST_SUITE("json_cli") {
  TEST_CASE("rational and scalar json") {
    CHECK(io::to_json(q(3, 6)) == json("1/2"));
    CHECK(io::rational_from_json(json("-4/6")) == q(-2, 3));
    CHECK(io::rational_from_json(json(7)) == q(7));
    CHECK_THROWS_AS(io::rational_from_json(json(0.5)), InputError);
    CHECK(io::rational_from_json(json(0.5), true) == q(1, 2));
    CHECK(io::scalar_from_json(io::to_json(Scalar(q(1, 3), q(-2)))) == Scalar(q(1, 3), q(-2)));
    CHECK(io::scalar_from_json(io::to_json(Scalar(q(5, 7)))) == Scalar(q(5, 7)));
    const Scalar z = Scalar::approx(0.25L, -1.5L);
    CHECK(io::scalar_from_json(io::to_json(z), true) == z);
  }

  TEST_CASE("step function json round-trips") {
    oracle::Generator gen(12);
    for (int i = 0; i < 30; ++i) {
      const StepFunction f = gen.step(q(-5), q(5), 7, 6, i % 2 == 0);
      const json j = io::to_json(f);
      CHECK(io::step_from_json(j) == f);
      CHECK(io::to_json(io::step_from_json(j)) == j);
      REQUIRE(!j.empty());
      CHECK(j[0].size() == 6);
    }
    const StepFunction approx = StepFunction::indicator(q(0), q(1, 4), Scalar::approx(0.7L));
    const json ja = io::to_json(approx);
    CHECK(ja[0].size() == 4);
    CHECK(io::to_json(io::step_from_json(ja, true)) == ja);
    CHECK_THROWS_AS(io::step_from_json(ja), InputError);
    CHECK(io::step_from_json(json::parse(kUpDown)) ==
          StepFunction::indicator(q(0), q(2)) - StepFunction::indicator(q(2), q(3)));
    CHECK(io::step_from_json(json::parse(R"([["1/2","3/2","1/3"]])")) ==
          StepFunction::indicator(q(1, 2), q(3, 2), Scalar(q(1, 3))));
    CHECK_THROWS_AS(io::step_from_json(json::parse("[[0,1]]")), InputError);
    CHECK_THROWS_AS(io::step_from_json(json::parse("{}")), InputError);
    CHECK_THROWS_AS(io::step_from_json(json::parse("[[0,1,1],[0.5,2,2]]"), true), InputError);
  }

  TEST_CASE("structured round-trips") {
    const GaborSystem sys(StepFunction::indicator(q(0), q(2)) - StepFunction::indicator(q(2), q(3)), q(1), q(1));
    const GkTable t = gk_table(sys);
    const json jt = io::to_json(t);
    CHECK(io::to_json(io::gk_table_from_json(jt)) == jt);
    const json jc = io::to_json(cc_bounds(sys));
    CHECK(io::to_json(io::cc_report_from_json(jc)) == jc);
    const json jv = io::to_json(two_overlap_verdict(StepFunction::indicator(q(0), q(2))));
    CHECK(io::to_json(io::frame_verdict_from_json(jv)) == jv);
    const ExponentSet e({0, 1, 3});
    const json jf = io::to_json(e, frame_set_report(e));
    CHECK(io::to_json(e, io::frame_set_report_from_json(jf)) == jf);
    const json jw = io::to_json(walnut_band(sys, -1, 2));
    CHECK(io::to_json(io::walnut_band_from_json(jw)) == jw);
    const json js = io::to_json(sqrt_inverse_check(q(3, 4), q(1), 3));
    CHECK(io::to_json(io::sqrt_report_from_json(js)) == js);
    const json jd = io::to_json(decay_table(case2_family(q(1), q(3)), {2, 3, 4}));
    CHECK(io::to_json(io::decay_rows_from_json(jd)) == jd);
  }

  TEST_CASE("cli cc example") {
    const json j = run_json({"cc", "--g", kUpDown, "--a", "1", "--b", "1"});
    CHECK(j["A_raw"] == "1");
    CHECK(j["B_raw"] == "5");
    CHECK(j["verdict"] == "FrameCertified");
    CHECK(io::to_json(io::cc_report_from_json(j)) == j);
    const Run csv = run({"--format", "csv", "cc", "--g", kUpDown, "--a", "1", "--b", "1"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "A_raw,B_raw,frame_lower,frame_upper,verdict\n1,5,1,5,FrameCertified\n");
    const Run late = run({"cc", "--g", kUpDown, "--a", "1", "--b", "1", "--format", "csv"});
    CHECK(late.out == csv.out);
  }

  TEST_CASE("cli frameset and abc examples") {
    const json f = run_json({"frameset", "--exps", "0,1,2"});
    CHECK(f["verdict"]["status"] == "NotFrame");
    CHECK(f["min_is_zero"] == true);
    const ExponentSet e({0, 1, 2});
    CHECK(io::to_json(e, io::frame_set_report_from_json(f)) == f);
    const json g = run_json({"frameset", "--exps", "0,1,3"});
    CHECK(g["verdict"]["status"] == "Frame");
    const json a = run_json({"abc", "--a", "9/10", "--c", "3"});
    CHECK(a["status"] == "NotFrame");
    CHECK(a["rule"] == "INTEGER_C");
    const json r = run_json({"abc", "--a", "1/2", "--b", "2", "--c", "3/4"});
    CHECK(r["reduced"]["a"] == "1");
    CHECK(r["reduced"]["c"] == "3/2");
    CHECK(run_json({"abc", "--a", "irr:0.7071", "--c", "3/2"})["rule"] == "JANSSEN_1");
    CHECK(run({"--approx", "abc", "--a", "0.7", "--c", "1.95"}).code == 0);
  }

  TEST_CASE("cli subcommands produce parseable output") {
    const json gk = run_json({"gk", "--g", kUpDown, "--a", "1", "--b", "1"});
    CHECK(gk["entries"].size() == 3);
    CHECK(io::to_json(io::gk_table_from_json(gk)) == gk);
    const json en = run_json({"energy", "--g", "[[0,3,1]]", "--a", "1", "--b", "1", "--f",
                              "[[0,1,1],[1,3,\"-1/2\"],[3,4,1],[4,6,\"-1/2\"]]"});
    CHECK(en["energy"] == "5/2");
    CHECK(en["ratio"] == "5/6");
    CHECK(en["exact"] == true);
    const json wal = run_json({"walnut", "--g", kUpDown, "--a", "1", "--b", "1", "--k-min", "0", "--k-max", "1"});
    CHECK(wal["band_high"] == 3);
    CHECK(io::to_json(io::walnut_band_from_json(wal)) == wal);
    const json fc = run_json({"fundamental-check", "--trials", "4"});
    CHECK(fc["max_err_beta_gamma"].get<double>() <= 1e-12);
    CHECK(io::to_json(io::sqrt_report_from_json(fc)) == fc);
    const json rep = run_json({"fundamental-check", "--g", kUpDown, "--a", "1", "--b", "1", "--f", "[[0,1,1]]"});
    CHECK(rep["walnut_agrees"] == true);
    CHECK(rep["decomposition_agrees"] == true);
    CHECK(rep["preframe_adjoint_agrees"] == true);
    const Run w = run({"witness", "--family", "case2", "--c", "3", "--ns", "2:4"});
    CHECK(w.code == 0);
    CHECK(w.out == "n,norm_sq,energy,ratio\n2,3,5/2,5/6\n3,9/2,5/2,5/9\n4,6,5/2,5/12\n");
    const json wj = run_json({"--format", "json", "witness", "--family", "riesz", "--size", "3", "--ns", "1,5"});
    CHECK(wj[1]["norm_sq"] == "10");
    CHECK(io::to_json(io::decay_rows_from_json(wj)) == wj);
    const Run ch = run({"chart", "--a-grid", "1/2", "--c-grid", "1/2:1:1/4"});
    CHECK(ch.out == "a,c,status,rule\n1/2,1/2,Frame,C_LT_1\n1/2,3/4,Frame,C_LT_1\n1/2,1,Unknown,NONE\n");
    const json cj = run_json({"--format", "json", "chart", "--a-grid", "1/10,1/5", "--c-grid", "2"});
    CHECK(cj.size() == 2);
    CHECK(cj[0]["rule"] == "INTEGER_C");
  }

  TEST_CASE("@file inputs") {
    const std::string path = "json_cli_window.json";
    {
      std::ofstream out(path);
      out << kUpDown;
    }
    const json j = run_json({"cc", "--g", "@" + path, "--a", "1", "--b", "1"});
    CHECK(j["B_raw"] == "5");
    std::remove(path.c_str());
    CHECK(run({"cc", "--g", "@" + path, "--a", "1", "--b", "1"}).code == cli::kRejected);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"cc", "--g", "[[0,2,1],", "--a", "1", "--b", "1"}).code == cli::kRejected);
    CHECK(run({"cc", "--g", "[[0,2,0.5]]", "--a", "1", "--b", "1"}).code == cli::kRejected);
    CHECK(run({"--approx", "cc", "--g", "[[0,2,0.5]]", "--a", "1", "--b", "1"}).code == cli::kOk);
    CHECK(run({"cc", "--g", kUpDown, "--a", "0.5", "--b", "1"}).code == cli::kRejected);
    CHECK(run({"cc", "--g", kUpDown, "--a", "0", "--b", "1"}).code == cli::kRejected);
    CHECK(run({"nosuch"}).code == cli::kRejected);
    CHECK(run({}).code == cli::kRejected);
    CHECK(run({"frameset", "--exps", "1,0"}).code == cli::kRejected);
    CHECK(run({"witness", "--family", "p2", "--g", "[[0,1,1],[1,2,2]]"}).code == cli::kRejected);
    CHECK(run({"fundamental-check", "--a", "1/3"}).code == cli::kRejected);
    CHECK(run({"fundamental-check", "--g", kUpDown, "--a", "2", "--b", "1", "--f", "[[0,1,1]]"}).code ==
          cli::kRejected);
    // --strict turns an inconclusive verdict into exit 3.
    CHECK(run({"cc", "--g", "[[0,3,1]]", "--a", "1", "--b", "1"}).code == cli::kOk);
    CHECK(run({"--strict", "cc", "--g", "[[0,3,1]]", "--a", "1", "--b", "1"}).code == cli::kInconclusive);
    CHECK(run({"--strict", "abc", "--a", "3/5", "--c", "7/5"}).code == cli::kInconclusive);
    CHECK(run({"--strict", "abc", "--a", "9/10", "--c", "3"}).code == cli::kOk);
    CHECK(run({"--help"}).code == cli::kOk);
  }

  TEST_CASE("repeated runs are byte-identical") {
    const std::vector<std::vector<std::string>> jobs = {
        {"gk", "--g", kUpDown, "--a", "1", "--b", "1"},
        {"frameset", "--exps", "0,1,3"},
        {"--jobs", "4", "chart", "--a-grid", "1/20:1:1/20", "--c-grid", "1/20:3:1/20"},
        {"fundamental-check", "--a", "3/5", "--trials", "5", "--seed", "9"},
        {"--jobs", "3", "witness", "--family", "case1", "--ns", "2:12"},
        {"walnut", "--g", "[[0,\"1/2\",1],[\"1/2\",\"7/4\",\"-1/3\"]]", "--a", "3/4", "--b", "1/2"}};
    for (const auto& args : jobs) {
      const Run a = run(args), b = run(args);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
    }
    const Run one = run({"--jobs", "1", "witness", "--family", "case1", "--ns", "2:12"});
    const Run many = run({"--jobs", "6", "witness", "--family", "case1", "--ns", "2:12"});
    CHECK(one.out == many.out);
  }
}
