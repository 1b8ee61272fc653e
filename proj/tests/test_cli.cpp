#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(KNOTCONC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path temp_dir() {
  fs::path d = fs::temp_directory_path() / "knotconc_cli_tests";
  fs::create_directories(d);
  return d;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("analyze --twist") {
  RunResult r = run_cli("analyze --twist 34");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep.at("alexander") == "34*t^2 + -69*t^1 + 34*t^0");
  CHECK(rep.at("signature") == 0);
  CHECK(rep.at("signature_profile").at("jump_count") == 0);
  CHECK(rep.at("rho_zero").at("exactly_zero") == true);
  CHECK(rep.at("ac_classification").at("order_two") == true);
  CHECK(rep.at("ac_classification").at("order_two_witness") == json({6, 2}));
  CHECK(rep.at("strong_irreducibility").at("criterion_holds") == true);
  CHECK(rep.at("rho_one").at("nonzero") == true);

  // determinism: byte-identical on a second run
  CHECK(run_cli("analyze --twist 34").out == r.out);
}

TEST_CASE("analyze --twist 0 (unknot)") {
  RunResult r = run_cli("analyze --twist 0");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep.at("alexander") == "1*t^0");
  CHECK(rep.at("signature") == 0);
  CHECK(rep.at("rho_zero").at("exactly_zero") == true);
}

TEST_CASE("analyze --seifert") {
  fs::path dir = temp_dir();
  fs::path fig8 = dir / "fig8.json";
  write_file(fig8, R"({"size": 2, "rows": [[-1, 1], [0, 1]]})");
  RunResult r = run_cli("analyze --seifert " + fig8.string());
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep.at("alexander") == "1*t^2 + -3*t^1 + 1*t^0");
  CHECK(rep.at("signature") == 0);

  // tsv flatten of the same report
  RunResult t = run_cli("--tsv analyze --seifert " + fig8.string());
  REQUIRE(t.exit_code == 0);
  CHECK(t.out.find("alexander\t1*t^2 + -3*t^1 + 1*t^0\n") != std::string::npos);
}

TEST_CASE("analyze error exit codes") {
  CHECK(run_cli("analyze").exit_code == 2);               // no input selector
  CHECK(run_cli("analyze --seifert /no/such/file.json").exit_code == 2);

  fs::path dir = temp_dir();
  fs::path bad = dir / "bad_matrix.json";
  // parses as JSON but det(V - V^T) != 1
  write_file(bad, R"({"size": 2, "rows": [[0, 0], [0, 0]]})");
  CHECK(run_cli("analyze --seifert " + bad.string()).exit_code == 3);

  fs::path garbled = dir / "garbled.json";
  write_file(garbled, "{{{");
  CHECK(run_cli("analyze --seifert " + garbled.string()).exit_code == 2);
}

TEST_CASE("family enumeration") {
  RunResult r = run_cli("family --kmax 5");
  REQUIRE(r.exit_code == 0);
  json rows = json::parse(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].at("n") == 34);
  CHECK(rows[1].at("n") == 310);
  CHECK(rows[2].at("n") == 874);
  for (const auto& row : rows) CHECK(row.at("all_checks_pass") == true);

  json one = json::parse(run_cli("family --kmax 1").out);
  CHECK(one.size() == 1);
}

TEST_CASE("certify / verify round trip") {
  fs::path dir = temp_dir();
  fs::path spec = dir / "davis.json";
  write_file(spec, R"({"twists": [34, 310, 874]})");
  fs::path cert = dir / "davis_cert.json";
  RunResult c = run_cli("certify --family " + spec.string() + " --cmax 2 --output " +
                        cert.string());
  REQUIRE(c.exit_code == 0);
  REQUIRE(fs::exists(cert));

  CHECK(run_cli("verify " + cert.string()).exit_code == 0);

  // tamper with one byte of a recorded witness
  std::ifstream in(cert, std::ios::binary);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  size_t pos = text.find("\"conclusion\"");
  REQUIRE(pos != std::string::npos);
  text[pos + 15] = text[pos + 15] == 'x' ? 'y' : 'x';
  fs::path tampered = dir / "tampered.json";
  write_file(tampered, text);
  CHECK(run_cli("verify " + tampered.string()).exit_code == 1);

  fs::path truncated = dir / "truncated.json";
  write_file(truncated, text.substr(0, text.size() / 3));
  CHECK(run_cli("verify " + truncated.string()).exit_code == 2);
}

TEST_CASE("certify failure exits") {
  fs::path dir = temp_dir();
  fs::path spec = dir / "bad_family.json";
  write_file(spec, R"({"twists": [4]})");
  fs::path cert = dir / "never_written.json";
  RunResult r = run_cli("certify --family " + spec.string() + " --cmax 2 --output " +
                        cert.string());
  CHECK(r.exit_code == 1);

  CHECK(run_cli("certify --family /no/such/spec.json").exit_code == 2);
  CHECK(run_cli("--rho1-table /no/such/table.json certify --family " +
                spec.string())
            .exit_code == 2);
}

TEST_CASE("blanchfield exploration") {
  RunResult r = run_cli("blanchfield --twist 4 --complexity 2");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep.at("order") == "4*t^4 + -9*t^2 + 4*t^0");
  int lagrangian = 0;
  for (const auto& s : rep.at("submodules"))
    if (s.value("lagrangian", false)) ++lagrangian;
  CHECK(lagrangian == 2);

  json r34 = json::parse(run_cli("blanchfield --twist 34 --complexity 3").out);
  int iso = 0;
  for (const auto& s : r34.at("submodules")) {
    bool trivial = s.at("generator_divisor") == "1*t^0" ||
                   s.at("generator_divisor") == r34.at("order");
    if (s.at("isotropic") == true && !trivial) ++iso;
  }
  CHECK(iso == 0);

  json r0 = json::parse(run_cli("blanchfield --twist 0").out);
  CHECK(r0.at("zero_module") == true);

  json loc = json::parse(
      run_cli("blanchfield --twist 4 --complexity 2 --p \"2*t^2 + -1*t^1 + -2*t^0\"")
          .out);
  CHECK(loc.at("order") == "2*t^2 + -1*t^1 + -2*t^0");
}
