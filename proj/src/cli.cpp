#include "scord/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "scord/blocks.hpp"
#include "scord/cnf.hpp"
#include "scord/copies.hpp"
#include "scord/corpus.hpp"
#include "scord/embed.hpp"
#include "scord/embedding.hpp"
#include "scord/forcing.hpp"
#include "scord/hclass.hpp"
#include "scord/spec.hpp"
#include "scord/term.hpp"

namespace scord {

namespace {

using nlohmann::json;

// One result in both shapes; the text lines and the machine object are
// filled from the same computed values so the formats agree field-for-field.
struct Report {
  std::vector<std::string> lines;
  json machine = json::object();
  int exit_code = 0;
};

void emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "machine") {
    out << r.machine.dump(2) << "\n";
    return;
  }
  for (const std::string& line : r.lines) out << line << "\n";
}

std::string address_text(const Address& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(a[i]);
  }
  return out;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error("cannot read file " + path);
  return json::parse(in);
}

Term parse_valid(const std::string& s) {
  Term t = parse_term(s);
  require_valid(t);
  return t;
}

Report do_parse(const std::string& s) {
  Report r;
  const Term t = parse_term(s);
  const bool ok = term_valid(t);
  r.lines = {"term: " + t.repr(), "valid: " + std::string(ok ? "true" : "false"),
             "parts: " + std::to_string(t.arity())};
  r.machine = {{"term", t.repr()}, {"valid", ok}, {"parts", t.arity()}};
  r.exit_code = ok ? 0 : 1;
  return r;
}

Report do_embeds(const std::string& sa, const std::string& sb) {
  Report r;
  const bool ok = embeds(parse_valid(sa), parse_valid(sb));
  r.lines = {ok ? "true" : "false"};
  r.machine = {{"embeds", ok}};
  r.exit_code = ok ? 0 : 1;
  return r;
}

Report do_witness(const std::string& sa, const std::string& sb, int depth) {
  Report r;
  const Term s = parse_valid(sa), t = parse_valid(sb);
  const auto w = embed_witness(s, t, depth);
  if (!w) {
    r.lines = {"false"};
    r.machine = {{"embeds", false}};
    r.exit_code = 1;
    return r;
  }
  r.lines = {"true", "depth: " + std::to_string(w->depth)};
  json pairs = json::array();
  for (const auto& [from, to] : w->pairs) {
    r.lines.push_back(address_text(from) + " -> " + address_text(to));
    pairs.push_back({{"from", from}, {"to", to}});
  }
  r.machine = {{"embeds", true}, {"depth", w->depth}, {"pairs", std::move(pairs)}};
  return r;
}

Report do_mdecomp(const std::string& s) {
  Report r;
  const Decomposition d = min_decomposition(parse_valid(s));
  r.lines = {"m: " + std::to_string(d.m)};
  json parts = json::array(), prov = json::array();
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    r.lines.push_back("part " + std::to_string(i) + ": " + d.parts[i].repr());
    parts.push_back(d.parts[i].repr());
    prov.push_back({d.provenance[i].first, d.provenance[i].second});
  }
  r.machine = {{"m", d.m}, {"parts", std::move(parts)}, {"provenance", std::move(prov)}};
  return r;
}

Report do_blocks(const std::string& s) {
  Report r;
  const Decomposition d = min_decomposition(parse_valid(s));
  const std::vector<Block> bs = block_partition(d.parts);
  std::string kinds;
  json arr = json::array();
  for (const Block& b : bs) {
    if (!kinds.empty()) kinds += " ";
    kinds += to_char(b.kind);
    json parts = json::array();
    for (const HTerm& p : b.parts) parts.push_back(p.repr());
    arr.push_back({{"kind", std::string(1, to_char(b.kind))},
                   {"first", b.first},
                   {"last", b.last},
                   {"parts", std::move(parts)}});
  }
  const std::string bar = bar_notation(bs);
  r.lines = {"bar: " + bar, "kinds: " + kinds};
  r.machine = {{"bar", bar}, {"kinds", kinds}, {"blocks", std::move(arr)}};
  return r;
}

std::string join_notes(const std::vector<std::string>& notes) {
  std::string out;
  for (const std::string& n : notes) {
    if (!out.empty()) out += "; ";
    out += n;
  }
  return out;
}

Report do_sq(const std::string& s) {
  Report r;
  const SqReport rep = sq_report(parse_valid(s));
  r.lines = {"sq: " + to_string(rep.overall)};
  for (std::size_t i = 0; i < rep.blocks.size(); ++i) {
    const BlockSq& b = rep.blocks[i];
    std::string line = "block " + std::to_string(i) + " (" +
                       std::string(1, to_char(b.block.kind)) + "): " +
                       (b.elided ? "elided" : to_string(b.factor));
    if (!b.annotations.empty()) line += " [" + join_notes(b.annotations) + "]";
    r.lines.push_back(std::move(line));
  }
  for (const std::string& n : rep.annotations) r.lines.push_back("note: " + n);
  r.machine = sq_report_to_json(rep);
  return r;
}

Report do_ordinal(const std::string& s) {
  Report r;
  const Cnf a = parse_cnf(s);
  const OrdinalSq os = sq_of_ordinal(a);
  const PosetExpr norm = normalize(os.expr);
  r.lines = {"ordinal: " + to_string(a), "towers: " + to_string(os.expr),
             "sq: " + to_string(norm)};
  for (const std::string& n : os.annotations) r.lines.push_back("note: " + n);
  r.machine = {{"ordinal", to_string(a)},
               {"towers", poset_to_json(os.expr)},
               {"towers_text", to_string(os.expr)},
               {"sq", poset_to_json(norm)},
               {"sq_text", to_string(norm)},
               {"annotations", os.annotations}};
  return r;
}

Report do_copy(const std::string& s, const std::string& spec_file) {
  Report r;
  const Term t = parse_valid(s);
  const SubsetSpec spec = spec_from_json(load_json(spec_file));
  shape_check(spec, t);
  const bool ok = contains_copy(t, spec);
  r.lines = {ok ? "true" : "false"};
  r.machine = {{"contains_copy", ok}};
  r.exit_code = ok ? 0 : 1;
  return r;
}

Report do_lestar(const std::string& s, const std::string& fa, const std::string& fb) {
  Report r;
  const Term t = parse_valid(s);
  const SubsetSpec a = spec_from_json(load_json(fa));
  const SubsetSpec b = spec_from_json(load_json(fb));
  const Verdict v = le_star(t, a, b);
  const std::string text = v == Verdict::True    ? "true"
                           : v == Verdict::False ? "false"
                                                 : "unknown";
  r.lines = {text};
  r.machine = {{"le_star", text}};
  r.exit_code = v == Verdict::True ? 0 : 1;
  return r;
}

Report do_disjoint(const std::string& s) {
  Report r;
  const Term t = parse_valid(s);
  const bool infinite = std::any_of(t.parts().begin(), t.parts().end(),
                                    [](const HTerm& p) { return p.is_sum(); });
  if (!infinite) {
    r.lines = {"false", "note: every part is finite; any two copies intersect"};
    r.machine = {{"found", false},
                 {"note", "every part is finite; any two copies intersect"}};
    r.exit_code = 1;
    return r;
  }
  const DisjointCopies d = disjoint_copies(t);
  r.lines = {"true", "first image: " + spec_to_json(d.first_image).dump(),
             "second image: " + spec_to_json(d.second_image).dump()};
  r.machine = {{"found", true},
               {"first", rep_to_json(d.first)},
               {"second", rep_to_json(d.second)},
               {"first_image", spec_to_json(d.first_image)},
               {"second_image", spec_to_json(d.second_image)}};
  return r;
}

Report do_fusion(const std::string& s, const std::string& chain_file, std::size_t stages) {
  Report r;
  const Term t = parse_valid(s);
  const json j = load_json(chain_file);
  if (!j.is_array() || j.empty())
    throw precondition_error("chain file must hold a nonempty array of embeddings");
  std::vector<EmbeddingRep> chain;
  for (const json& e : j) chain.push_back(rep_from_json(e));
  if (stages == 0) stages = chain.size();
  if (stages > chain.size())
    throw precondition_error("--stages exceeds the chain length " +
                             std::to_string(chain.size()));
  chain.resize(stages);
  const FusionResult f = fuse(t, chain);
  const SubsetSpec image = image_spec(f.fused, t, t);
  r.lines = {"stages: " + std::to_string(stages),
             "anchors: " + std::to_string(f.anchors.size()),
             "image: " + spec_to_json(image).dump()};
  r.machine = {{"stages", stages},
               {"fused", rep_to_json(f.fused)},
               {"anchors", f.anchors},
               {"image", spec_to_json(image)}};
  return r;
}

struct CorpusCase {
  std::string line;
  json machine;
};

CorpusCase corpus_case(std::size_t index, const Term& t) {
  const Decomposition d = min_decomposition(t);
  const std::vector<Block> bs = block_partition(d.parts);
  const std::string bar = bar_notation(bs);
  const SqReport rep = sq_report(t);
  const std::string sq_text = to_string(rep.overall);
  CorpusCase c;
  c.line = "#" + std::to_string(index) + " " + t.repr() + " :: m=" +
           std::to_string(d.m) + " :: " + bar + " :: " + sq_text;
  c.machine = {{"index", index},
               {"term", t.repr()},
               {"m", d.m},
               {"bar", bar},
               {"sq_text", sq_text},
               {"sq", poset_to_json(rep.overall)}};
  return c;
}

Report do_corpus(std::uint64_t seed, std::uint64_t count) {
  // Draws are sequential so a seed names one corpus; the pure analysis of
  // each case runs on a small pool, results kept in case order.
  Corpus gen(seed);
  std::vector<Term> terms;
  for (std::uint64_t i = 0; i < count; ++i) terms.push_back(gen.term());

  std::vector<CorpusCase> cases(terms.size());
  const unsigned workers =
      std::max(1u, std::min({8u, std::thread::hardware_concurrency(),
                             static_cast<unsigned>(terms.size())}));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= terms.size()) return;
        cases[i] = corpus_case(i, terms[i]);
      }
    });
  for (std::thread& th : pool) th.join();

  Report r;
  json arr = json::array();
  for (CorpusCase& c : cases) {
    r.lines.push_back(std::move(c.line));
    arr.push_back(std::move(c.machine));
  }
  r.machine = {{"seed", seed}, {"count", count}, {"cases", std::move(arr)}};
  return r;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"scattered linear orders: embeddability, decompositions, copies, quotients"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "machine"}));

  std::string term_s, term_t, spec_file, a_file, b_file, chain_file, cnf_s;
  int depth = 3;
  std::size_t stages = 0;
  std::uint64_t seed = 0, count = 10;

  CLI::App* c_parse = app.add_subcommand("parse", "parse a term and report validity");
  c_parse->add_option("term", term_s)->required();

  CLI::App* c_embeds = app.add_subcommand("embeds", "decide embeddability S into T");
  c_embeds->add_option("S", term_s)->required();
  c_embeds->add_option("T", term_t)->required();

  CLI::App* c_witness = app.add_subcommand("witness", "embedding certificate to a depth");
  c_witness->add_option("S", term_s)->required();
  c_witness->add_option("T", term_t)->required();
  c_witness->add_option("--depth", depth)->check(CLI::Range(1, 8));

  CLI::App* c_mdecomp = app.add_subcommand("mdecomp", "minimal ha decomposition");
  c_mdecomp->add_option("term", term_s)->required();

  CLI::App* c_blocks = app.add_subcommand("blocks", "block partition in bar notation");
  c_blocks->add_option("term", term_s)->required();

  CLI::App* c_sq = app.add_subcommand("sq", "separative quotient of the copy poset");
  c_sq->add_option("term", term_s)->required();

  CLI::App* c_ordinal = app.add_subcommand("ordinal", "quotient for a CNF ordinal");
  c_ordinal->add_option("cnf", cnf_s)->required();

  CLI::App* c_copy = app.add_subcommand("copy", "does the subset hold a copy");
  c_copy->add_option("term", term_s)->required();
  c_copy->add_option("--spec", spec_file)->required();

  CLI::App* c_lestar = app.add_subcommand("lestar", "almost-inclusion of copies");
  c_lestar->add_option("term", term_s)->required();
  c_lestar->add_option("--a", a_file)->required();
  c_lestar->add_option("--b", b_file)->required();

  CLI::App* c_disjoint = app.add_subcommand("disjoint", "two copies meeting only in finite parts");
  c_disjoint->add_option("term", term_s)->required();

  CLI::App* c_fusion = app.add_subcommand("fusion", "diagonal fusion of an embedding chain");
  c_fusion->add_option("term", term_s)->required();
  c_fusion->add_option("--chain", chain_file)->required();
  c_fusion->add_option("--stages", stages);

  CLI::App* c_corpus = app.add_subcommand("corpus", "seeded analysis corpus");
  c_corpus->add_option("--seed", seed);
  c_corpus->add_option("--count", count)->check(CLI::Range(std::size_t{1}, std::size_t{100000}));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    Report r;
    if (*c_parse) r = do_parse(term_s);
    else if (*c_embeds) r = do_embeds(term_s, term_t);
    else if (*c_witness) r = do_witness(term_s, term_t, depth);
    else if (*c_mdecomp) r = do_mdecomp(term_s);
    else if (*c_blocks) r = do_blocks(term_s);
    else if (*c_sq) r = do_sq(term_s);
    else if (*c_ordinal) r = do_ordinal(cnf_s);
    else if (*c_copy) r = do_copy(term_s, spec_file);
    else if (*c_lestar) r = do_lestar(term_s, a_file, b_file);
    else if (*c_disjoint) r = do_disjoint(term_s);
    else if (*c_fusion) r = do_fusion(term_s, chain_file, stages);
    else r = do_corpus(seed, count);
    emit(r, format, out);
    return r.exit_code;
  } catch (const error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace scord
