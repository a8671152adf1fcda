#include "altcf/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "altcf/analysis.hpp"
#include "altcf/json_io.hpp"

namespace altcf {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

struct IntList {
  std::vector<Integer> values;
  std::vector<std::size_t> positions;
  bool ellipsis = false;
};

IntList parse_int_list(std::string_view text, std::size_t offset, bool allow_ellipsis) {
  IntList out;
  if (allow_ellipsis && text.size() >= 3 && text.substr(text.size() - 3) == "...") {
    out.ellipsis = true;
    text.remove_suffix(3);
  }
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    try {
      out.values.push_back(parse_integer(trim(tok)));
    } catch (const std::invalid_argument&) {
      throw SpecError(offset + pos, std::nullopt,
                      "malformed integer '" + std::string(trim(tok)) + "' at position " + std::to_string(offset + pos));
    }
    out.positions.push_back(offset + pos);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Touches every listed term so the stream validators run now.
template <class Access>
void validate_terms(const IntList& list, Access access) {
  for (std::size_t i = 0; i < list.values.size(); ++i) {
    try {
      access(i);
    } catch (const SeriesError& e) {
      throw SpecError(list.positions[e.index()], e.index(), "index " + std::to_string(e.index()) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw SpecError(list.positions[i], i, "index " + std::to_string(i) + ": " + e.what());
    }
  }
}

}  // namespace

Target parse_inline_spec(std::string_view text) {
  Target t;
  t.label = std::string(text);
  auto starts = [&](std::string_view p) { return text.substr(0, p.size()) == p; };

  if (starts("typeI:B=")) {
    auto list = parse_int_list(text.substr(8), 8, false);
    TypeISeries s{Stream<Integer>(list.values)};
    validate_terms(list, [&](std::size_t i) { (void)s.B(i); });
    t.series = s;
  } else if (starts("typeII:A=")) {
    auto list = parse_int_list(text.substr(9), 9, false);
    TypeIISeries s{Stream<Integer>(list.values)};
    validate_terms(list, [&](std::size_t i) { (void)s.A(i); });
    t.series = s;
  } else if (starts("M=")) {
    auto list = parse_int_list(text.substr(2), 2, true);
    Stream<Integer> M = list.values;
    if (list.ellipsis) {
      auto vals = list.values;
      M = Stream<Integer>::by_index([vals](std::size_t i) { return i < vals.size() ? vals[i] : vals.back(); });
    }
    MNConstruction c(M);
    validate_terms(list, [&](std::size_t i) { (void)c.M(i); });
    t.series = c.series();
    t.scf = c.scf();
    t.construction = std::move(c);
  } else if (starts("scf=")) {
    auto list = parse_int_list(text.substr(4), 4, false);
    auto a0 = list.values.front();
    std::vector<Integer> rest(list.values.begin() + 1, list.values.end());
    SimpleCF cf(a0, Stream<Integer>(rest));
    validate_terms(list, [&](std::size_t i) {
      if (i > 0) (void)cf.quotient(i);
    });
    t.scf = cf;
  } else if (starts("rat=")) {
    try {
      t.rational = Rat::parse(trim(text.substr(4)));
    } catch (const std::exception& e) {
      throw SpecError(4, std::nullopt, std::string("bad rational: ") + e.what());
    }
    t.scf = scf_of_rational(*t.rational);
  } else {
    throw SpecError(0, std::nullopt,
                    "unrecognized spec '" + std::string(text) + "'; expected typeI:B=, typeII:A=, M=, scf= or rat=");
  }
  return t;
}

Target resolve_target(std::string_view text) {
  if (text.find('=') != std::string_view::npos) return parse_inline_spec(text);
  Target t;
  t.entry = catalog(text);
  t.label = t.entry->name;
  if (t.entry->kind != SeriesKind::Scf) t.series = t.entry->primary_series();
  t.scf = t.entry->scf;
  t.construction = t.entry->construction;
  return t;
}

namespace {

bool json_format(const std::string& format) { return format == "json"; }

std::vector<Integer> take_terms(const SimpleCF& cf, std::size_t count) {
  std::vector<Integer> out;
  if (count == 0) return out;
  out.push_back(cf.a0());
  for (std::size_t n = 1; n < count && cf.has_quotient(n); ++n) out.push_back(cf.quotient(n));
  return out;
}

std::vector<Integer> take(const Stream<Integer>& s, std::size_t count) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < count && s.has(i); ++i) out.push_back(s[i]);
  return out;
}

Rat parse_rat_arg(const std::string& text) {
  try {
    return Rat::parse(trim(text));
  } catch (const std::exception&) {
    throw UsageError("malformed rational '" + text + "'");
  }
}

int cmd_digits(const Target& t, std::size_t digits, bool certified, const std::string& format, std::ostream& out) {
  DigitsResult d;
  if (t.rational) {
    d.approximation = *t.rational;
    d.certified = render_decimal(*t.rational, Rat(0), digits);
  } else if (t.entry) {
    d = compute_digits(*t.entry, digits);
  } else if (t.series) {
    d = compute_digits(*t.series, digits);
  } else {
    d = compute_digits(*t.scf, digits);
  }
  std::string text;
  if (certified || d.certified.exact || d.certified.certified_digits() >= digits) {
    text = d.certified.str();
  } else {
    text = d.truncated(digits);
  }
  if (json_format(format)) {
    json j{{"target", t.label},
           {"digits", text},
           {"certified_digits", d.certified.certified_digits()},
           {"exact", d.certified.exact},
           {"terms", d.terms},
           {"error_bound", d.error_bound.str()}};
    out << j.dump() << '\n';
  } else {
    out << text << '\n';
  }
  return 0;
}

int cmd_cf(const Target& t, std::size_t terms, std::ostream& out) {
  if (t.scf) {
    out << integer_array_json(take_terms(*t.scf, terms)) << '\n';
    return 0;
  }
  GCF cf = std::visit(
      [](const auto& s) -> GCF {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, TypeISeries>) {
          return typeI_to_cf(s);
        } else if constexpr (std::is_same_v<S, TypeIISeries>) {
          return typeII_to_cf(s);
        } else {
          throw UsageError("Engel series have no equivalent continued fraction with positive elements");
        }
      },
      *t.series);
  std::vector<Element> elems;
  for (std::size_t n = 1; n <= terms && cf.has_element(n); ++n) elems.push_back(cf.element(n));
  out << gcf_json(elems) << '\n';
  return 0;
}

int cmd_series(const Target& t, std::size_t depth, const std::string& format, std::ostream& out) {
  AnySeries s = t.series ? *t.series : AnySeries(scf_to_series(*t.scf).series);
  std::size_t reach = 0;
  auto has = [&](std::size_t n) { return std::visit([n](const auto& x) { return x.has(n); }, s); };
  if (!has(0)) throw UsageError("empty series");
  while (reach < depth && has(reach + 1)) ++reach;
  auto sums = partial_sums(s, reach);
  if (json_format(format)) {
    out << partial_sums_json(sums) << '\n';
  } else {
    if (!t.series && t.scf && t.scf->a0() != 0) out << "# value = " << to_string(t.scf->a0()) << " + sum\n";
    for (const auto& p : sums) out << p.n << ' ' << p.sum << ' ' << p.tail_bound << '\n';
  }
  return 0;
}

int cmd_pierce(const std::string& value, std::size_t depth, const std::string& format, std::ostream& out) {
  auto r = parse_rat_arg(value);
  PierceExpansion p;
  try {
    p = pierce_expand(r, depth);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  if (json_format(format)) {
    out << "{\"A\":" << integer_array_json(p.A) << ",\"terminated\":" << (p.terminated ? "true" : "false") << "}\n";
  } else {
    out << integer_array_json(p.A) << (p.terminated ? " terminating" : " (depth limit)") << '\n';
  }
  return 0;
}

int cmd_construct(const Target& t, std::size_t depth, const std::string& format, std::ostream& out) {
  if (!t.construction) throw UsageError(t.label + " is not an M-construction; use M=... or davison_shallit");
  const auto& c = *t.construction;
  auto M = take(c.M_stream(), depth + 1);
  auto N = take(c.N_stream(), M.size());
  auto A = take(c.A_stream(), M.size());
  auto scf = take_terms(c.scf(), M.size() + 1);
  if (json_format(format)) {
    out << "{\"M\":" << integer_array_json(M) << ",\"N\":" << integer_array_json(N)
        << ",\"A\":" << integer_array_json(A) << ",\"scf\":" << integer_array_json(scf) << "}\n";
  } else {
    out << "M   " << integer_array_json(M) << '\n'
        << "N   " << integer_array_json(N) << "  (from N_1)\n"
        << "A   " << integer_array_json(A) << '\n'
        << "scf " << integer_array_json(scf) << '\n';
  }
  return 0;
}

int cmd_decompose(const Target& t, std::size_t depth, const std::string& format, std::ostream& out) {
  const TypeIISeries* s = t.series ? std::get_if<TypeIISeries>(&*t.series) : nullptr;
  if (!s) throw UsageError(t.label + " is not a type II series");
  auto res = decompose_to_M(s->stream(), depth);
  if (auto* f = std::get_if<DecomposeFailure>(&res)) {
    if (json_format(format)) {
      out << json{{"ok", false}, {"index", f->index}, {"reason", f->reason}}.dump() << '\n';
    } else {
      out << "no M stream: fails at index " << f->index << ": " << f->reason << '\n';
    }
    return 0;
  }
  const auto& c = std::get<MNConstruction>(res);
  auto M = take(c.M_stream(), depth + 1);
  if (json_format(format)) {
    out << "{\"ok\":true,\"M\":" << integer_array_json(M) << "}\n";
  } else {
    out << "M " << integer_array_json(M) << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& suite, std::size_t depth, const std::string& format, std::ostream& out) {
  std::vector<CheckReport> reports;
  try {
    reports = run_suite(suite, depth);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.pass ? 0 : 1;
  if (json_format(format)) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << (r.pass ? "PASS " : "FAIL ") << r.check << ' ' << r.params.dump() << " depth " << r.depth;
      if (r.first_failure) out << ": " << *r.first_failure;
      out << '\n';
    }
    if (failed == 0) {
      out << "all " << reports.size() << " checks passed\n";
    } else {
      out << failed << " of " << reports.size() << " checks failed\n";
    }
  }
  return failed == 0 ? 0 : 1;
}

int cmd_measure(const Target& t, std::size_t depth, const std::vector<std::string>& mus,
                std::optional<long> schedule, const std::string& format, std::ostream& out) {
  ExponentSchedule sched;
  if (schedule) {
    sched = shifted_index_exponent(*schedule);
  } else {
    std::vector<Rat> list;
    for (const auto& m : mus) list.push_back(parse_rat_arg(m));
    if (list.empty()) list.push_back(Rat(2));
    for (const auto& m : list) {
      if (m.sign() <= 0) throw UsageError("exponents must be positive");
    }
    sched = fixed_exponents(list);
  }
  MeasureEstimate m;
  if (t.entry) {
    m = measure_scan(*t.entry, depth, sched);
  } else if (t.series) {
    m = measure_scan(t.label, series_approximants(*t.series, depth), sched);
  } else {
    m = measure_scan(t.label, scf_approximants(*t.scf, depth), sched);
  }
  if (json_format(format)) {
    out << "{\"constant\":" << json(m.constant).dump() << ",\"exploratory\":" << (m.exploratory ? "true" : "false")
        << ",\"certificates\":[";
    for (std::size_t i = 0; i < m.certificates.size(); ++i) {
      const auto& c = m.certificates[i];
      if (i) out << ',';
      out << "{\"n\":" << c.n << ",\"mu\":\"" << c.mu << "\",\"q\":" << c.q << ",\"gap_num\":" << c.gap_bound.num()
          << ",\"gap_den\":" << c.gap_bound.den() << ",\"certified\":" << (c.certified ? "true" : "false") << '}';
    }
    out << "],\"max_certified\":" << (m.max_certified ? "\"" + m.max_certified->str() + "\"" : "null") << "}\n";
  } else {
    out << "# " << m.constant << (m.exploratory ? " (exploratory: no finite claim to test)" : "") << '\n';
    out << "# n digits(q) mu certified\n";
    for (const auto& c : m.certificates) {
      out << c.n << ' ' << decimal_digits(c.q) << ' ' << c.mu << ' ' << (c.certified ? "yes" : "no") << '\n';
    }
    out << "largest certified exponent: " << (m.max_certified ? m.max_certified->str() : "none") << '\n';
  }
  return 0;
}

int cmd_bfile(const Target& t, const std::string& which, std::size_t count, const std::string& format,
              std::ostream& out) {
  Stream<Integer> s;
  std::size_t offset = 0;
  auto pick = which;
  if (pick.empty()) {
    if (t.entry && t.entry->sylvester) {
      pick = "s";
    } else if (t.series) {
      pick = std::holds_alternative<TypeISeries>(*t.series) ? "B" : "A";
    } else {
      pick = "scf";
    }
  }
  if (pick == "A" && t.series && !std::holds_alternative<TypeISeries>(*t.series)) {
    s = std::visit([](const auto& x) { return x.stream(); }, *t.series);
  } else if (pick == "B" && t.series) {
    if (const auto* a = std::get_if<TypeISeries>(&*t.series)) {
      s = a->stream();
    } else if (const auto* b = std::get_if<TypeIISeries>(&*t.series)) {
      s = b->as_type_i().stream();
    } else {
      const auto& e = std::get<EngelSeries>(*t.series);
      s = Stream<Integer>::by_index([e](std::size_t n) { return e.product(n); });
    }
  } else if (pick == "scf" && t.scf) {
    auto cf = *t.scf;
    s = Stream<Integer>(Stream<Integer>::Rule([cf](const std::deque<Integer>& p) -> std::optional<Integer> {
      auto n = p.size();
      if (n == 0) return cf.a0();
      if (!cf.has_quotient(n)) return std::nullopt;
      return cf.quotient(n);
    }));
  } else if (pick == "s" && t.entry && t.entry->sylvester) {
    s = t.entry->sylvester->stream();
  } else if (pick == "M" && t.construction) {
    s = t.construction->M_stream();
  } else if (pick == "N" && t.construction) {
    s = t.construction->N_stream();
    offset = 1;
  } else {
    throw UsageError("stream '" + pick + "' is not available for " + t.label);
  }
  if (json_format(format)) {
    out << integer_array_json(take(s, count)) << '\n';
  } else {
    auto terms = take(s, count);
    out << bfile(Stream<Integer>(terms), terms.size(), offset);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact alternating series, Engel series and continued fractions", "altcf"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string target;
  std::size_t depth = 12;
  std::size_t digits = 15;
  std::size_t terms = 12;
  std::size_t count = 20;
  std::size_t pierce_depth = 64;
  bool certified = false;
  std::vector<std::string> mus;
  std::optional<long> schedule;
  std::string which;
  std::string suite;

  auto* c_digits = app.add_subcommand("digits", "Decimal digits of a constant (truncated)");
  c_digits->add_option("target", target, "Catalog name or inline spec")->required();
  c_digits->add_option("--digits", digits, "Fraction digits")->check(CLI::Range(1, 100000));
  c_digits->add_flag("--certified", certified, "Print only digits guaranteed by the tail bound");

  auto* c_cf = app.add_subcommand("cf", "Continued fraction prefix as a JSON array");
  c_cf->add_option("target", target)->required();
  c_cf->add_option("--terms", terms, "Number of terms (a0 counts for simple CFs)");

  auto* c_series = app.add_subcommand("series", "Exact partial sums with tail bounds");
  c_series->add_option("target", target)->required();
  c_series->add_option("--depth", depth);

  auto* c_pierce = app.add_subcommand("pierce", "Pierce expansion of a rational in (0, 1]");
  c_pierce->add_option("value", target, "p/q")->required();
  c_pierce->add_option("--depth", pierce_depth);

  auto* c_construct = app.add_subcommand("construct", "M -> (N, A, SCF) construction");
  c_construct->add_option("target", target)->required();
  c_construct->add_option("--depth", depth);

  auto* c_decompose = app.add_subcommand("decompose", "Recover M from a type II series, if possible");
  c_decompose->add_option("target", target)->required();
  c_decompose->add_option("--depth", depth);

  auto* c_verify = app.add_subcommand("verify", "Run verification suites");
  c_verify->add_option("suite", suite, "all or a suite name")->required();
  c_verify->add_option("--depth", depth);

  auto* c_measure = app.add_subcommand("measure", "Certified irrationality-exponent lower bounds");
  c_measure->add_option("target", target)->required();
  c_measure->add_option("--depth", depth);
  auto* mu_opt = c_measure->add_option("--mu", mus, "Exponents to test, e.g. 5/2,3")->delimiter(',');
  c_measure->add_option("--schedule", schedule, "Test mu = n + OFFSET at approximant n")->excludes(mu_opt);

  auto* c_bfile = app.add_subcommand("bfile", "OEIS b-file of an integer stream");
  c_bfile->add_option("target", target)->required();
  c_bfile->add_option("--stream", which, "A, B, M, N, s or scf");
  c_bfile->add_option("--count", count);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (c_pierce->parsed()) return cmd_pierce(target, pierce_depth, format, out);
    if (c_verify->parsed()) return cmd_verify(suite, depth, format, out);
    Target t;
    try {
      t = resolve_target(target);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (c_digits->parsed()) return cmd_digits(t, digits, certified, format, out);
    if (c_cf->parsed()) return cmd_cf(t, terms, out);
    if (c_series->parsed()) return cmd_series(t, depth, format, out);
    if (c_construct->parsed()) return cmd_construct(t, depth, format, out);
    if (c_decompose->parsed()) return cmd_decompose(t, depth, format, out);
    if (c_measure->parsed()) return cmd_measure(t, depth, mus, schedule, format, out);
    if (c_bfile->parsed()) return cmd_bfile(t, which, count, format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace altcf
