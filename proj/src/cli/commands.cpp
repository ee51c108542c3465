#include "planechar/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "planechar/betti.hpp"
#include "planechar/character.hpp"
#include "planechar/hilburch.hpp"
#include "planechar/json_io.hpp"
#include "planechar/resolve.hpp"
#include "planechar/verify.hpp"

namespace planechar::cli {

namespace {

using charcore::NumericalCharacter;
using json_io::Json;

enum class Format { Json, Tsv, Text };

struct RunConfig {
  FieldSpec field;
  Format format = Format::Json;
  std::uint64_t seed = hilburch::kDefaultProbeSeed;
  unsigned jobs = 1;
};

// Violations are reported through the exit status, not by throwing.
struct Outcome {
  std::string body;
  bool violation = false;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> input_lines(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (auto t = trim(line); !t.empty()) lines.push_back(std::move(t));
  }
  return lines;
}

// Accepts JSON "[4,2]" and the display form "(4, 2)".
NumericalCharacter parse_character(std::string text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    text.front() = '[';
    text.back() = ']';
  }
  return json_io::character_from_json(json_io::parse(text));
}

std::string join(std::span<const Int> v, std::string_view sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// "2O(-2) + O(-4)": one summand per distinct twist.
std::string sheaf_sum(std::span<const Int> degrees) {
  std::map<Int, Int> mult;
  for (Int d : degrees) ++mult[d];
  std::string s;
  for (const auto& [d, m] : mult) {
    if (!s.empty()) s += " + ";
    if (m > 1) s += std::to_string(m);
    s += "O(-" + std::to_string(d) + ")";
  }
  return s;
}

std::string resolution_display(const betti::BettiSequence& seq) {
  return "0 -> " + sheaf_sum(seq.b()) + " -> " + sheaf_sum(seq.a()) + " -> I_Z -> 0";
}

std::string table_text(const charcore::HilbertTable& t) {
  std::ostringstream os;
  os << std::setw(4) << "n" << std::setw(6) << "H" << std::setw(7) << "Delta" << std::setw(6) << "h0"
     << std::setw(6) << "h1" << '\n';
  for (std::size_t n = 0; n < t.hilbert.size(); ++n) {
    os << std::setw(4) << n << std::setw(6) << t.hilbert[n] << std::setw(7) << t.delta[n] << std::setw(6)
       << t.h0[n] << std::setw(6) << t.h1[n] << '\n';
  }
  return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- analyze ---------------------------------------------------------------

struct Analysis {
  NumericalCharacter chi;
  charcore::HilbertTable table;
  std::vector<charcore::Piece> pieces;
  betti::BettiSequence seq;
  betti::SauerResult sauer;
  betti::Verdict verdict;
  betti::RemarkReport remarks;
};

Analysis analyze(const NumericalCharacter& chi) {
  auto seq = betti::minimal_betti(chi);
  auto sauer = betti::sauer_condition(seq);
  return Analysis{chi,   charcore::hilbert_table(chi), charcore::decompose(chi), seq, sauer, betti::classify(chi),
                  betti::remark_checks(chi, seq)};
}

bool violates(const Analysis& a) { return a.verdict.diagnostic.has_value() || !a.remarks.all_pass(); }

Json analysis_json(const Analysis& a) {
  Json j;
  j["character"] = json_io::to_json(a.chi);
  j["s"] = a.chi.length();
  j["degree"] = a.table.degree;
  j["hilbert"] = json_io::to_json(a.table);
  j["connected"] = a.verdict.connected;
  j["decomposition"] = json_io::to_json(a.pieces);
  j["betti"] = json_io::to_json(a.seq);
  j["sauer"] = json_io::to_json(a.sauer);
  j["verdict"] = json_io::to_json(a.verdict);
  j["remarks"] = json_io::to_json(a.remarks);
  if (a.verdict.diagnostic) j["diagnostic"] = *a.verdict.diagnostic;
  return j;
}

const char* kSummaryHeader = "character\ts\tdegree\tconnected\tsauer\tsmoothable\tgap";

std::string summary_tsv(const NumericalCharacter& chi, Int degree, const betti::Verdict& v) {
  std::ostringstream os;
  os << '[' << join(chi.entries(), ",") << "]\t" << chi.length() << '\t' << degree << '\t' << v.connected << '\t'
     << v.sauer_ok << '\t' << v.smoothable << '\t' << (v.witness ? std::to_string(*v.witness) : "-");
  return os.str();
}

std::string analysis_text(const Analysis& a) {
  std::ostringstream os;
  os << "chi = " << a.chi.to_string() << "   s = " << a.chi.length() << "   deg = " << a.table.degree << '\n';
  os << table_text(a.table);
  os << "connected: " << yes_no(a.verdict.connected);
  if (a.verdict.witness) os << " (gap at t = " << *a.verdict.witness << ')';
  os << '\n';
  os << "decomposition:";
  for (const auto& p : a.pieces) os << "  " << p.character.to_string() << " + " << p.shift;
  os << '\n';
  os << "minimal Betti: a = (" << join(a.seq.a()) << "), b = (" << join(a.seq.b()) << ")\n";
  os << "resolution: " << resolution_display(a.seq) << '\n';
  os << "b_n >= a_{n+2}: ";
  if (a.sauer.ok) {
    os << "holds";
  } else {
    const std::size_t p = *a.sauer.witness;
    os << "fails at n = " << p << " (b_" << p << " = " << a.seq.b()[p - 1] << " < a_" << p + 2 << " = "
       << a.seq.a()[p + 1] << ')';
  }
  if (!a.sauer.equalities.empty()) {
    os << ", equality at n =";
    for (auto p : a.sauer.equalities) os << ' ' << p;
  }
  os << '\n';
  os << "smoothable: " << yes_no(a.verdict.smoothable) << '\n';
  for (const auto& c : a.remarks.clauses) {
    os << (c.pass ? "  ok   " : "  FAIL ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
  }
  if (a.verdict.diagnostic) os << "diagnostic: " << *a.verdict.diagnostic << '\n';
  return os.str();
}

Outcome render_analyses(const std::vector<Analysis>& all, bool batch, Format format) {
  Outcome o;
  for (const auto& a : all) o.violation = o.violation || violates(a);
  switch (format) {
    case Format::Json:
      if (!batch) {
        o.body = dump(analysis_json(all.front()));
      } else {
        for (const auto& a : all) o.body += analysis_json(a).dump() + "\n";
      }
      break;
    case Format::Tsv:
      o.body = std::string(kSummaryHeader) + "\ta\tb\n";
      for (const auto& a : all) {
        o.body += summary_tsv(a.chi, a.table.degree, a.verdict) + "\t" + join(a.seq.a(), ",") + "\t" +
                  join(a.seq.b(), ",") + "\n";
      }
      break;
    case Format::Text:
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (i) o.body += '\n';
        o.body += analysis_text(all[i]);
      }
      break;
  }
  return o;
}

// ---- enumerate ---------------------------------------------------------------

enum class Filter { All, Connected, NonConnected };

Outcome cmd_enumerate(Int s_max, Int d_max, Filter filter, const RunConfig& cfg) {
  auto characters = charcore::enumerate_characters(s_max, d_max);
  const auto verdicts =
      verify::parallel_map(characters, cfg.jobs, [](const NumericalCharacter& chi) { return betti::classify(chi); });
  Outcome o;
  Json rows = Json::array();
  std::string tsv = std::string(kSummaryHeader) + "\n";
  std::ostringstream text;
  std::size_t count = 0;
  for (std::size_t i = 0; i < characters.size(); ++i) {
    const auto& chi = characters[i];
    const auto& v = verdicts[i];
    o.violation = o.violation || v.diagnostic.has_value();
    if ((filter == Filter::Connected && !v.connected) || (filter == Filter::NonConnected && v.connected)) continue;
    ++count;
    const Int deg = charcore::degree(chi);
    Json r;
    r["character"] = json_io::to_json(chi);
    r["s"] = chi.length();
    r["degree"] = deg;
    r["verdict"] = json_io::to_json(v);
    rows.push_back(std::move(r));
    tsv += summary_tsv(chi, deg, v) + "\n";
    text << std::left << std::setw(24) << chi.to_string() << std::right << " deg " << std::setw(3) << deg
         << "  connected " << std::setw(3) << yes_no(v.connected) << "  sauer " << std::setw(3) << yes_no(v.sauer_ok);
    if (v.witness) text << "  gap " << *v.witness;
    text << '\n';
  }
  switch (cfg.format) {
    case Format::Json: {
      Json j;
      j["s_max"] = s_max;
      j["d_max"] = d_max;
      j["filter"] = filter == Filter::All ? "all" : filter == Filter::Connected ? "connected" : "nonconnected";
      j["count"] = count;
      j["rows"] = std::move(rows);
      o.body = dump(j);
      break;
    }
    case Format::Tsv:
      o.body = tsv;
      break;
    case Format::Text:
      o.body = text.str() + std::to_string(count) + " characters\n";
      break;
  }
  return o;
}

// ---- construct ---------------------------------------------------------------

struct Construction {
  betti::BettiSequence seq;
  hilburch::GeneratorSet generators;
  hilburch::ProbeReport probe;
  std::optional<int> certificate;
  bool certified = false;
};

Construction construct(const betti::BettiSequence& seq, const RunConfig& cfg, bool certify) {
  auto matrix = hilburch::build_exi_matrix(seq);
  auto probe = hilburch::rank_drop_probe(matrix, hilburch::kDefaultProbeTrials, cfg.seed, cfg.field);
  auto gens = hilburch::maximal_minors(matrix);
  Construction c{seq, std::move(gens), std::move(probe), std::nullopt, certify};
  if (certify) c.certificate = hilburch::support_certificate(c.generators, cfg.field);
  return c;
}

Json construction_json(const Construction& c) {
  Json j;
  j["betti"] = json_io::to_json(c.seq);
  j["matrix"] = json_io::to_json(c.generators.source);
  j["generators"] = json_io::generators_to_json(c.generators.minors);
  j["probe"] = json_io::to_json(c.probe);
  if (c.certified) j["support_certificate"] = c.certificate ? Json(*c.certificate) : Json(nullptr);
  return j;
}

std::string construction_text(const Construction& c) {
  std::ostringstream os;
  const auto& m = c.generators.source.matrix();
  os << "a = (" << join(c.seq.a()) << "), b = (" << join(c.seq.b()) << ")\n";
  os << "matrix (" << m.rows() << " x " << m.cols() << "), row degrees (" << join(m.row_degrees())
     << "), column degrees (" << join(m.col_degrees()) << "):\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      os << (j ? ", " : " ") << (m.is_zero_at(i, j) ? std::string("0") : m.at(i, j)->to_string());
    }
    os << " ]\n";
  }
  os << "generators:\n";
  for (const auto& g : c.generators.minors) os << "  " << g.to_string() << "   (degree " << g.degree() << ")\n";
  os << "rank probe: " << c.probe.samples.size() << " points over " << c.probe.field << ", rank "
     << c.probe.expected_rank << " off (1:0:0), rank " << c.probe.rank_at_support << " at (1:0:0)\n";
  if (c.certified) {
    os << "support certificate: "
       << (c.certificate ? "x1^" + std::to_string(*c.certificate) + ", x2^" + std::to_string(*c.certificate) +
                               " in I"
                         : std::string("none found"))
       << '\n';
  }
  return os.str();
}

Outcome render_constructions(const std::vector<Construction>& all, bool batch, Format format) {
  Outcome o;
  switch (format) {
    case Format::Json:
      if (!batch) {
        o.body = dump(construction_json(all.front()));
      } else {
        for (const auto& c : all) o.body += construction_json(c).dump() + "\n";
      }
      break;
    case Format::Tsv:
      o.body = "a\tb\tgenerators\n";
      for (const auto& c : all) {
        std::string gens;
        for (const auto& g : c.generators.minors) gens += (gens.empty() ? "" : ";") + g.to_string();
        o.body += join(c.seq.a(), ",") + "\t" + join(c.seq.b(), ",") + "\t" + gens + "\n";
      }
      break;
    case Format::Text:
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (i) o.body += '\n';
        o.body += construction_text(all[i]);
      }
      break;
  }
  return o;
}

// A stdin line is a Betti object {"a":..,"b":..} or a character array.
betti::BettiSequence betti_from_line(const std::string& line) {
  const auto t = trim(line);
  if (!t.empty() && (t.front() == '[' || t.front() == '(')) return betti::minimal_betti(parse_character(t));
  return json_io::betti_from_json(json_io::parse(t));
}

// ---- resolve -------------------------------------------------------------------

// A JSON array of strings, or polynomials separated by ',', ';' or newlines.
std::vector<poly::HomogPoly> parse_generators(const std::string& text) {
  const auto t = trim(text);
  if (!t.empty() && t.front() == '[') return json_io::generators_from_json(json_io::parse(t));
  std::vector<poly::HomogPoly> gens;
  std::string item;
  auto flush = [&] {
    if (auto s = trim(item); !s.empty()) gens.push_back(poly::HomogPoly::parse(s));
    item.clear();
  };
  for (char ch : t) {
    if (ch == ',' || ch == ';' || ch == '\n') {
      flush();
    } else {
      item += ch;
    }
  }
  flush();
  if (gens.empty()) throw Error(ErrorCode::ParseError, "no generators given");
  return gens;
}

Outcome render_resolution(const resolve::ResolutionReport& r, Format format) {
  Outcome o;
  switch (format) {
    case Format::Json:
      o.body = dump(json_io::to_json(r));
      break;
    case Format::Tsv:
      o.body = "n\tH\tdelta\talpha\tbeta\n";
      for (Int n = 0; n <= r.top_degree; ++n) {
        const auto i = static_cast<std::size_t>(n);
        o.body += std::to_string(n) + "\t" + std::to_string(r.hilbert.hilbert[i]) + "\t" +
                  std::to_string(r.hilbert.delta[i]) + "\t" + std::to_string(r.alpha[i]) + "\t" +
                  std::to_string(r.beta[i]) + "\n";
      }
      break;
    case Format::Text: {
      std::ostringstream os;
      os << "field: " << r.field << ", degrees 0.." << r.top_degree << '\n';
      os << "minimal generators:\n";
      for (const auto& g : r.generators) os << "  " << g.to_string() << "   (degree " << g.degree() << ")\n";
      if (r.betti) {
        os << "a = (" << join(r.betti->a()) << "), b = (" << join(r.betti->b()) << ")\n";
        os << "resolution: " << resolution_display(*r.betti) << '\n';
      }
      if (const auto chi = resolve::character_of(r)) os << "chi = " << chi->to_string() << '\n';
      os << "deg = " << r.hilbert.degree << '\n' << table_text(r.hilbert);
      o.body = os.str();
      break;
    }
  }
  return o;
}

// ---- selftest -----------------------------------------------------------------

Outcome cmd_selftest(Int s_max, Int d_max, const RunConfig& cfg) {
  verify::SelftestOptions opts;
  opts.s_max = s_max;
  opts.d_max = d_max;
  opts.field = cfg.field;
  opts.jobs = cfg.jobs;
  opts.seed = cfg.seed;
  const auto tallies = verify::run_selftest(opts);
  const std::size_t characters = tallies.empty() ? 0 : tallies.front().checked;
  Outcome o;
  for (const auto& t : tallies) o.violation = o.violation || !t.ok();
  switch (cfg.format) {
    case Format::Json: {
      Json j;
      j["s_max"] = s_max;
      j["d_max"] = d_max;
      j["field"] = cfg.field.to_string();
      j["characters"] = characters;
      Json props = Json::array();
      for (const auto& t : tallies) {
        Json p;
        p["property"] = t.name;
        p["checked"] = t.checked;
        p["failed"] = t.failed;
        p["counterexample"] = t.ok() ? Json(nullptr) : Json(t.counterexample);
        props.push_back(std::move(p));
      }
      j["properties"] = std::move(props);
      j["pass"] = !o.violation;
      o.body = dump(j);
      break;
    }
    case Format::Tsv:
      o.body = "property\tchecked\tfailed\tcounterexample\n";
      for (const auto& t : tallies) {
        o.body += t.name + "\t" + std::to_string(t.checked) + "\t" + std::to_string(t.failed) + "\t" +
                  (t.ok() ? "-" : t.counterexample) + "\n";
      }
      break;
    case Format::Text: {
      std::ostringstream os;
      os << characters << " characters with s <= " << s_max << ", deg <= " << d_max << " over " << cfg.field.to_string()
         << '\n';
      for (const auto& t : tallies) {
        os << (t.ok() ? "PASS " : "FAIL ") << t.name << "  (" << t.checked - t.failed << '/' << t.checked << ")\n";
        if (!t.ok()) os << "     first counterexample: " << t.counterexample << '\n';
      }
      os << (o.violation ? "selftest FAILED\n" : "all properties pass\n");
      o.body = os.str();
      break;
    }
  }
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical characters, Betti numbers and Hilbert-Burch ideals of plane zero-dimensional schemes",
               "planechar"};
  app.require_subcommand(1);

  std::string field_text = "prime:32003";
  std::string format_text = "json";
  std::uint64_t seed = hilburch::kDefaultProbeSeed;
  unsigned jobs = 1;
  std::string out_path;
  app.add_option("--field", field_text, "coefficient field: prime:<p>, prime or rational")->capture_default_str();
  app.add_option("--format", format_text, "output format")
      ->check(CLI::IsMember({"json", "tsv", "text"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for the rank-drop probe");
  app.add_option("--jobs", jobs, "worker threads for enumerate and selftest")->check(CLI::Range(1u, 256u));
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  std::string analyze_input;
  auto* analyze_cmd = app.add_subcommand("analyze", "invariants of one character (stdin: one per line)");
  analyze_cmd->add_option("character", analyze_input, "character as a JSON array, e.g. [4,2]");

  Int enum_s = 0, enum_d = 0;
  std::string filter_text = "all";
  auto* enumerate_cmd = app.add_subcommand("enumerate", "classify every character in a window");
  enumerate_cmd->add_option("s_max", enum_s)->required()->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("d_max", enum_d)->required()->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("filter", filter_text)->check(CLI::IsMember({"all", "connected", "nonconnected"}));

  std::string construct_character, construct_betti;
  bool certify = false;
  auto* construct_cmd = app.add_subcommand("construct", "explicit Hilbert-Burch matrix and its minors");
  auto* char_opt = construct_cmd->add_option("--character", construct_character, "character as a JSON array");
  construct_cmd->add_option("--betti", construct_betti, "Betti object {\"a\":[..],\"b\":[..]}")->excludes(char_opt);
  construct_cmd->add_flag("--certify", certify, "also find n with x1^n, x2^n in the ideal");

  std::string resolve_input, resolve_file;
  auto* resolve_cmd = app.add_subcommand("resolve", "generator and syzygy degrees of an explicit ideal");
  auto* gen_opt = resolve_cmd->add_option("generators", resolve_input, "polynomials or a JSON array of strings");
  resolve_cmd->add_option("--file", resolve_file, "read generators from a file")->excludes(gen_opt);

  Int self_s = 0, self_d = 0;
  auto* selftest_cmd = app.add_subcommand("selftest", "run every property check over a window");
  selftest_cmd->add_option("s_max", self_s)->required()->check(CLI::PositiveNumber);
  selftest_cmd->add_option("d_max", self_d)->required()->check(CLI::PositiveNumber);

  for (auto* sub : {analyze_cmd, enumerate_cmd, construct_cmd, resolve_cmd, selftest_cmd}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  Outcome outcome;
  bool batch_errors = false;
  try {
    RunConfig cfg;
    cfg.field = FieldSpec::parse(field_text);
    cfg.format = format_text == "tsv" ? Format::Tsv : format_text == "text" ? Format::Text : Format::Json;
    cfg.seed = seed;
    cfg.jobs = jobs;

    // Batch lines that fail to parse are reported and skipped.
    auto batch = [&](auto&& fn) {
      using T = std::decay_t<decltype(fn(std::string{}))>;
      std::vector<T> items;
      std::size_t number = 0;
      for (const auto& line : input_lines(in)) {
        ++number;
        try {
          items.push_back(fn(line));
        } catch (const Error& e) {
          err << "line " << number << ": " << e.what() << '\n';
          batch_errors = true;
        }
      }
      return items;
    };

    if (*analyze_cmd) {
      if (!analyze_input.empty()) {
        outcome = render_analyses({analyze(parse_character(analyze_input))}, false, cfg.format);
      } else {
        auto all = batch([](const std::string& line) { return analyze(parse_character(line)); });
        if (!all.empty()) outcome = render_analyses(all, true, cfg.format);
      }
    } else if (*enumerate_cmd) {
      const Filter filter = filter_text == "connected"      ? Filter::Connected
                            : filter_text == "nonconnected" ? Filter::NonConnected
                                                            : Filter::All;
      outcome = cmd_enumerate(enum_s, enum_d, filter, cfg);
    } else if (*construct_cmd) {
      if (!construct_character.empty() || !construct_betti.empty()) {
        const auto seq = construct_character.empty()
                             ? json_io::betti_from_json(json_io::parse(construct_betti))
                             : betti::minimal_betti(parse_character(construct_character));
        outcome = render_constructions({construct(seq, cfg, certify)}, false, cfg.format);
      } else {
        auto all = batch([&](const std::string& line) { return construct(betti_from_line(line), cfg, certify); });
        if (!all.empty()) outcome = render_constructions(all, true, cfg.format);
      }
    } else if (*resolve_cmd) {
      std::string text = resolve_input;
      if (!resolve_file.empty()) {
        std::ifstream file(resolve_file);
        if (!file) throw Error(ErrorCode::ParseError, "cannot read " + resolve_file);
        text.assign(std::istreambuf_iterator<char>(file), {});
      } else if (text.empty()) {
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      const resolve::GradedIdeal ideal{parse_generators(text)};
      outcome = render_resolution(resolve::syzygy_betti(ideal, cfg.field), cfg.format);
    } else if (*selftest_cmd) {
      outcome = cmd_selftest(self_s, self_d, cfg);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << out_path << '\n';
      return kExitInvalidInput;
    }
    file << outcome.body;
  } else {
    out << outcome.body;
  }
  if (outcome.violation) return kExitViolation;
  return batch_errors ? kExitInvalidInput : kExitOk;
}

}  // namespace planechar::cli
