#include "scord/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "scord/embedding.hpp"

using namespace scord;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const json& content) : path(name) {
    std::ofstream f(path);
    f << content.dump();
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("embeds prints the verdict and encodes it in the exit code") {
  Run neg = cli({"embeds", "w+1", "w"});
  CHECK(neg.code == 1);
  CHECK(neg.out == "false\n");
  Run pos = cli({"embeds", "w", "w+1"});
  CHECK(pos.code == 0);
  CHECK(pos.out == "true\n");
  Run machine = cli({"--format", "machine", "embeds", "w+1", "w"});
  CHECK(machine.code == 1);
  CHECK(json::parse(machine.out) == json{{"embeds", false}});
}

TEST_CASE("parse reports canonical form and validity") {
  Run ok = cli({"parse", "1+w"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("term: 1+w") != std::string::npos);
  CHECK(ok.out.find("valid: true") != std::string::npos);

  // The parser enforces the class invariant itself, so a bad head is an
  // input error, not a mathematical negative.
  Run bad = cli({"parse", "w[w[w];1]"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("head element") != std::string::npos);

  Run broken = cli({"parse", "w[["});
  CHECK(broken.code == 2);
  CHECK(!broken.err.empty());
}

TEST_CASE("witness prints ordered address pairs") {
  Run pos = cli({"witness", "w", "w[w]", "--depth", "2"});
  CHECK(pos.code == 0);
  CHECK(pos.out.find("true") == 0);
  CHECK(pos.out.find("->") != std::string::npos);

  Run neg = cli({"witness", "w[w]", "w", "--depth", "2"});
  CHECK(neg.code == 1);
  CHECK(neg.out == "false\n");

  CHECK(cli({"witness", "w", "w", "--depth", "99"}).code == 2);
}

TEST_CASE("mdecomp and blocks agree with the library") {
  Run md = cli({"mdecomp", "1+w"});
  CHECK(md.code == 0);
  CHECK(md.out.find("m: 1") != std::string::npos);

  Run bl = cli({"blocks", "w*+w"});
  CHECK(bl.code == 0);
  CHECK(bl.out.find("bar: w*w") != std::string::npos);
  CHECK(bl.out.find("kinds: D") != std::string::npos);

  Run machine = cli({"--format", "machine", "blocks", "w*+w"});
  const json j = json::parse(machine.out);
  CHECK(j["bar"] == "w*w");
  CHECK(j["blocks"].size() == 1);
  CHECK(j["blocks"][0]["kind"] == "D");
}

TEST_CASE("sq prints the overall expression and the per-block factors") {
  Run r = cli({"sq", "w[w]"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sq: (P(wxw)/(FinxFin))+") == 0);

  Run machine = cli({"--format", "machine", "sq", "w+w"});
  const json j = json::parse(machine.out);
  CHECK(j["overall_text"] == "(P(w)/Fin)+ x (P(w)/Fin)+");

  Run trivial = cli({"sq", "3"});
  CHECK(trivial.code == 0);
  CHECK(trivial.out.find("sq: trivial") == 0);
}

TEST_CASE("ordinal goes through the CNF route") {
  Run r = cli({"ordinal", "w^2.3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("towers: ((rp^1(P(w)/Fin))+)^3") != std::string::npos);

  Run rem = cli({"ordinal", "w+3"});
  CHECK(rem.out.find("note: finite remainder 3") != std::string::npos);

  CHECK(cli({"ordinal", "w^^2"}).code == 2);
}

TEST_CASE("copy and lestar read spec files") {
  TempFile full("cli_full.json", json("full"));
  TempFile empty("cli_empty.json", json("empty"));
  TempFile evens("cli_evens.json",
                 json{{"explicit", json::object()},
                      {"tail", json{{"periodic", json::array({"full", "empty"})}}}});

  CHECK(cli({"copy", "w", "--spec", full.path}).code == 0);
  CHECK(cli({"copy", "w", "--spec", empty.path}).code == 1);
  CHECK(cli({"copy", "w", "--spec", "no_such_file.json"}).code == 2);

  Run t = cli({"lestar", "w", "--a", full.path, "--b", full.path});
  CHECK(t.code == 0);
  CHECK(t.out == "true\n");
  Run f = cli({"lestar", "w", "--a", full.path, "--b", evens.path});
  CHECK(f.code == 1);
  CHECK(f.out == "false\n");
  // Both sides must hold copies; an empty side is a precondition error.
  CHECK(cli({"lestar", "w", "--a", full.path, "--b", empty.path}).code == 2);

  // A parts spec on a one-part term with the wrong width names the path.
  TempFile bad("cli_bad.json", json{{"parts", json::array({"full", "empty"})}});
  Run shape = cli({"copy", "w", "--spec", bad.path});
  CHECK(shape.code == 2);
  CHECK(shape.err.find("path") != std::string::npos);
}

TEST_CASE("disjoint splits an infinite order and refuses a finite one") {
  Run r = cli({"disjoint", "w"});
  CHECK(r.code == 0);
  CHECK(r.out.find("true") == 0);
  CHECK(r.out.find("first image:") != std::string::npos);

  Run fin = cli({"disjoint", "1+1"});
  CHECK(fin.code == 1);
  CHECK(fin.out.find("false") == 0);
}

TEST_CASE("fusion consumes a chain file") {
  // Two copies of the doubling self-embedding of w.
  SumRep sr;
  sr.sigma = {{}, 2, 0};
  sr.sub_periodic = {EmbeddingRep()};
  const json rep = rep_to_json(EmbeddingRep::sum(sr));
  TempFile chain("cli_chain.json", json::array({rep, rep}));

  Run r = cli({"fusion", "w", "--chain", chain.path});
  CHECK(r.code == 0);
  CHECK(r.out.find("stages: 2") == 0);

  Run one = cli({"fusion", "w", "--chain", chain.path, "--stages", "1"});
  CHECK(one.code == 0);
  CHECK(one.out.find("stages: 1") == 0);

  CHECK(cli({"fusion", "w", "--chain", chain.path, "--stages", "9"}).code == 2);
  TempFile notarray("cli_na.json", json::object());
  CHECK(cli({"fusion", "w", "--chain", notarray.path}).code == 2);
}

TEST_CASE("corpus is deterministic and ordered by case index") {
  Run a = cli({"corpus", "--seed", "9", "--count", "12"});
  Run b = cli({"corpus", "--seed", "9", "--count", "12"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  int i = 0;
  while (std::getline(lines, line)) {
    CHECK(line.find("#" + std::to_string(i) + " ") == 0);
    ++i;
  }
  CHECK(i == 12);

  Run m = cli({"--format", "machine", "corpus", "--seed", "9", "--count", "4"});
  const json j = json::parse(m.out);
  CHECK(j["cases"].size() == 4);
  CHECK(j["cases"][3]["index"] == 3);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"embeds", "w"}).code == 2);
  CHECK(cli({"--format", "yaml", "embeds", "w", "w"}).code == 2);
  Run help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("embeds") != std::string::npos);
}
