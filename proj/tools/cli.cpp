#include "cli.hpp"

#include "json_io.hpp"

#include <wps/cohomology.hpp>
#include <wps/fan.hpp>
#include <wps/lattice.hpp>
#include <wps/linalg.hpp>
#include <wps/polytope.hpp>
#include <wps/weights.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

namespace wps::cli {

namespace {

using io::json;

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json_mode = false;
  bool quiet = false;

  int emit(const json& j, const std::string& human) {
    if (json_mode) out << j.dump() << '\n';
    else if (!quiet) out << human;
    return ok;
  }

  int reject(const std::string& reason, std::optional<std::size_t> index, const std::string& message) {
    if (json_mode) {
      json e = {{"reason", reason}, {"message", message}};
      e["index"] = index ? json(*index) : json(nullptr);
      out << json{{"error", e}}.dump() << '\n';
    }
    if (!quiet) err << "wps: " << message << '\n';
    return rejected;
  }
};

std::string tuple_string(const std::vector<Integer>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + to_string(xs[i]);
  return s + ")";
}

WeightsVector parse_weights(const std::string& text) {
  try {
    return WeightsVector(parse_integer_list(text));
  } catch (const std::invalid_argument& e) {
    throw io::InputError(std::string("bad weights '") + text + "': " + e.what());
  }
}

Integer parse_int_arg(const std::string& text, const char* name) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw io::InputError(std::string("bad value for ") + name + ": '" + text + "'");
  }
}

// Column-aligned matrix with a header line of per-column weights.
std::string render_fan(const FanMatrix& f) {
  const auto& v = f.v;
  std::vector<std::size_t> width(v.cols(), 0);
  for (std::size_t j = 0; j < v.cols(); ++j) {
    width[j] = to_string(f.weights[j]).size();
    for (std::size_t i = 0; i < v.rows(); ++i) width[j] = std::max(width[j], to_string(v(i, j)).size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  std::ostringstream o;
  o << "weights " << tuple_string(f.weights.values()) << ", epsilon " << f.epsilon << "\n";
  o << "  q  ";
  for (std::size_t j = 0; j < v.cols(); ++j) o << (j ? " " : "") << pad(to_string(f.weights[j]), width[j]);
  o << "\n";
  for (std::size_t i = 0; i < v.rows(); ++i) {
    o << "     [";
    for (std::size_t j = 0; j < v.cols(); ++j) o << (j ? " " : "") << pad(to_string(v(i, j)), width[j]);
    o << "]\n";
  }
  return o.str();
}

std::string render_simplex(const LatticeSimplex& s) {
  std::ostringstream o;
  o << "vertices\n";
  for (const auto& p : s.vertices()) o << "  " << tuple_string(p) << "\n";
  return o.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

int cmd_reduce(Context& c, const WeightsVector& q) {
  auto r = reduction_data(q);
  bool red = is_reduced(q);
  json j = {{"weights", io::to_json(q)},
            {"d", io::to_json(r.d)},
            {"a_coeffs", io::to_json(r.a_coeffs)},
            {"a", io::to_json(r.a)},
            {"delta", io::to_json(r.delta)},
            {"delta_reduced", io::to_json(r.delta_reduced)},
            {"reduced", io::to_json(r.reduced)},
            {"is_reduced", red}};
  std::ostringstream o;
  o << "weights  " << tuple_string(q.values()) << "\n"
    << "d        " << tuple_string(r.d) << "\n"
    << "a_j      " << tuple_string(r.a_coeffs) << "\n"
    << "a        " << r.a << "\n"
    << "delta    " << r.delta << "\n"
    << "reduced  " << tuple_string(r.reduced.values()) << "\n"
    << "delta'   " << r.delta_reduced << "\n"
    << "is reduced: " << yes_no(red) << "\n";
  return c.emit(j, o.str());
}

int cmd_fan(Context& c, const WeightsVector& q, bool canonical) {
  auto f = canonical ? canonical_fan(q) : fan_from_weights(q);
  return c.emit(io::to_json(f), render_fan(f));
}

int cmd_recognize_fan(Context& c, const std::string& path) {
  auto v = io::fan_matrix_from_json(io::parse_file(path));
  auto r = recognize_fan(v);
  if (auto* rej = std::get_if<FanRejection>(&r)) {
    std::optional<std::size_t> idx;
    if (rej->reason != FanRejection::Reason::non_coprime_minors) idx = rej->index;
    return c.reject(reason_name(rej->reason), idx, rej->message);
  }
  auto& f = std::get<FanMatrix>(r);
  json j = io::to_json(f);
  j["epsilon"] = f.epsilon;
  return c.emit(j, render_fan(f));
}

int cmd_polytope(Context& c, const WeightsVector& q, const Integer& m) {
  auto s = polytope_of(q, m);
  return c.emit(io::to_json(s), render_simplex(s));
}

int cmd_recognize_polytope(Context& c, const std::string& path) {
  auto s = io::simplex_from_json(io::parse_file(path));
  PolytopeResult r = [&]() -> PolytopeResult {
    try {
      return recognize_polytope(s);
    } catch (const DegenerateSimplexError& e) {
      return PolytopeRejection{"degenerate simplex: " + std::string(e.what()), {}};
    }
  }();
  if (auto* rej = std::get_if<PolytopeRejection>(&r))
    return c.reject(rej->partial_weights.empty() ? "degenerate_simplex" : "not_wps_polytope", std::nullopt,
                    rej->message);
  auto& rec = std::get<PolytopeRecognition>(r);
  auto sorted = rec.wps.weights.sorted();
  json j = {{"weights", io::to_json(rec.wps.weights)},
            {"m", io::to_json(rec.wps.m)},
            {"sorted_weights", io::to_json(sorted)},
            {"fan", io::to_json(rec.fan)}};
  std::ostringstream o;
  o << "P" << tuple_string(rec.wps.weights.values()) << " with O(" << rec.wps.m << ")\n"
    << "sorted weights " << tuple_string(sorted.values()) << "\n"
    << render_fan(rec.fan);
  return c.emit(j, o.str());
}

int cmd_lattice(Context& c, const WeightsVector& q, const Integer& m, bool interior, bool histogram) {
  if (m < 0) throw io::InputError("-m must be nonnegative");
  json j = {{"weights", io::to_json(q)}, {"m", io::to_json(m)}};
  std::ostringstream o;
  auto pts = count_points(q, m);
  j["points"] = io::to_json(pts);
  o << "points   " << pts << "\n";
  if (interior) {
    auto in = m >= 1 ? count_interior(q, m) : Integer(0);
    j["interior"] = io::to_json(in);
    o << "interior " << in << "\n";
  }
  if (histogram) {
    json h = json::object();
    o << "face dimension histogram\n";
    for (const auto& [s, n] : face_histogram(q, m)) {
      h[std::to_string(s)] = io::to_json(n);
      o << "  " << s << ": " << n << "\n";
    }
    j["histogram"] = h;
  }
  return c.emit(j, o.str());
}

std::pair<long, long> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw io::InputError("range must look like A..B, got '" + text + "'");
  auto a = parse_int_arg(text.substr(0, dots), "--m-range");
  auto b = parse_int_arg(text.substr(dots + 2), "--m-range");
  if (!a.fits_slong_p() || !b.fits_slong_p() || a > b) throw io::InputError("bad --m-range '" + text + "'");
  return {a.get_si(), b.get_si()};
}

int cmd_cohom_table(Context& c, const WeightsVector& q, const std::string& range) {
  auto [lo, hi] = parse_range(range);
  auto t = hodge_table(q, lo, hi);
  json entries = json::array();
  for (const auto& [key, h] : t.entries) {
    auto [p, qq, m] = key;
    entries.push_back({{"p", p}, {"q", qq}, {"m", m}, {"h", io::to_json(h)}});
  }
  json j = {{"n", t.n}, {"weights", io::to_json(q)}, {"m_range", {lo, hi}}, {"entries", entries}};
  if (!c.quiet || c.json_mode) c.out << j.dump() << '\n';
  return ok;
}

int cmd_cohom(Context& c, const WeightsVector& q, long p, long qq, const Integer& m) {
  long n = static_cast<long>(q.dim());
  if (p < 0 || p > n || qq < 0 || qq > n)
    throw io::InputError("need 0 <= p, q <= n = " + std::to_string(n));
  auto h = hodge(q, p, qq, m);
  json j = {{"weights", io::to_json(q)}, {"p", p}, {"q", qq}, {"m", io::to_json(m)}, {"h", io::to_json(h)}};
  std::ostringstream o;
  o << "h^" << qq << " Omega^" << p << "(" << m << ") = " << h << "\n";
  return c.emit(j, o.str());
}

int cmd_betti(Context& c, const WeightsVector& q) {
  auto h = rational_homology(q);
  std::ostringstream o;
  for (std::size_t k = 0; k < h.size(); ++k) o << "h_" << k << " = " << h[k] << "\n";
  return c.emit({{"weights", io::to_json(q)}, {"betti", io::to_json(h)}}, o.str());
}

int cmd_divisors(Context& c, const WeightsVector& q, const std::optional<std::string>& ample) {
  auto d = divisor_info(q);
  json j = {{"weights", io::to_json(q)},
            {"reduced", io::to_json(reduce(q))},
            {"chow_generator", io::to_json(d.chow_generator)},
            {"picard_index", io::to_json(d.picard_index)},
            {"canonical_degree", to_string(d.canonical_degree)},
            {"gorenstein", d.gorenstein},
            {"fano", d.fano}};
  std::ostringstream o;
  o << "chow generator b   " << tuple_string(d.chow_generator) << "\n"
    << "picard index       " << d.picard_index << "\n"
    << "canonical degree   " << to_string(d.canonical_degree) << "\n"
    << "gorenstein         " << yes_no(d.gorenstein) << "\n"
    << "fano               " << yes_no(d.fano) << "\n";
  if (ample) {
    auto k = parse_int_arg(*ample, "--ample");
    bool a = d.is_ample(k);
    j["ample"] = {{"k", io::to_json(k)}, {"ample", a}};
    o << k << "*b ample        " << yes_no(a) << "\n";
  }
  return c.emit(j, o.str());
}

int cmd_gorenstein(Context& c, const WeightsVector& q) {
  auto d = divisor_info(q);
  auto r = reduction_data(q);
  json j = {{"weights", io::to_json(q)},
            {"reduced", io::to_json(r.reduced)},
            {"sum", io::to_json(r.reduced.sum())},
            {"delta", io::to_json(r.delta_reduced)},
            {"gorenstein", d.gorenstein},
            {"fano", d.fano}};
  std::ostringstream o;
  o << "gorenstein " << yes_no(d.gorenstein) << "\nfano       " << yes_no(d.fano) << "\n";
  return c.emit(j, o.str());
}

int cmd_iso(Context& c, const WeightsVector& q1, const WeightsVector& q2) {
  if (q1.size() != q2.size()) throw io::InputError("weights vectors have different lengths");
  bool iso = isomorphic(q1, q2);
  auto s1 = reduce(q1).sorted();
  auto s2 = reduce(q2).sorted();
  json j = {{"isomorphic", iso}, {"reduced_sorted", {io::to_json(s1), io::to_json(s2)}}};
  std::ostringstream o;
  o << "isomorphic " << yes_no(iso) << "\n"
    << "  " << tuple_string(s1.values()) << "\n  " << tuple_string(s2.values()) << "\n";
  return c.emit(j, o.str());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric data of weighted projective spaces P(Q)", "wps"};
  app.fallthrough();
  app.require_subcommand(1);
  Context c{out, err};
  app.add_flag("--json", c.json_mode, "Machine-readable JSON output");
  app.add_flag("--quiet", c.quiet, "Suppress human-readable output and diagnostics");

  std::string weights, with, matrix_path, vertices_path, m_text = "1", m_range;
  long p = 0, qq = 0;
  bool canonical = false, interior = false, histogram = false, table = false, betti = false;
  std::optional<std::string> ample;

  auto weights_opt = [&](CLI::App* sub) {
    sub->add_option("--weights", weights, "Comma-separated weights, e.g. 2,3,4,15,25")->required();
  };

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduction data d_j, a_j, a, delta, delta' and Q'");
  weights_opt(reduce_cmd);

  auto* fan_cmd = app.add_subcommand("fan", "A fan matrix of P(Q) via Hermite normal form");
  weights_opt(fan_cmd);
  fan_cmd->add_flag("--canonical", canonical, "Return the Q-canonical fan");

  auto* rfan_cmd = app.add_subcommand("recognize-fan", "Recognize a fan matrix and its weights");
  rfan_cmd->add_option("--matrix", matrix_path, "JSON file ('-' for stdin)")->required();

  auto* poly_cmd = app.add_subcommand("polytope", "Simplex of (P(Q), O(m))");
  weights_opt(poly_cmd);
  poly_cmd->add_option("-m", m_text, "Polarization (default 1)");

  auto* rpoly_cmd = app.add_subcommand("recognize-polytope", "Recognize a polarized wps simplex");
  rpoly_cmd->add_option("--vertices", vertices_path, "JSON file ('-' for stdin)")->required();

  auto* lat_cmd = app.add_subcommand("lattice-points", "Lattice points of the m-th dilate");
  weights_opt(lat_cmd);
  lat_cmd->add_option("-m", m_text, "Dilation factor (default 1)");
  lat_cmd->add_flag("--interior", interior, "Also count interior points");
  lat_cmd->add_flag("--histogram", histogram, "Histogram of smallest-face dimensions");

  auto* cohom_cmd = app.add_subcommand("cohom", "Dimensions h^q Omega^p(m)");
  weights_opt(cohom_cmd);
  cohom_cmd->add_option("-p", p, "Form degree p");
  cohom_cmd->add_option("-q", qq, "Cohomological degree q");
  cohom_cmd->add_option("-m", m_text, "Twist m (default 1)");
  auto* table_flag = cohom_cmd->add_flag("--table", table, "Emit the full table as JSON");
  cohom_cmd->add_option("--m-range", m_range, "Range A..B for --table")->needs(table_flag);
  cohom_cmd->add_flag("--betti", betti, "Rational Betti numbers h_0..h_2n");

  auto* div_cmd = app.add_subcommand("divisors", "Chow/Picard generators, delta', canonical class");
  weights_opt(div_cmd);
  div_cmd->add_option("--ample", ample, "Ask whether k times the Chow generator is ample");

  auto* gor_cmd = app.add_subcommand("gorenstein", "Gorenstein and Fano test");
  weights_opt(gor_cmd);

  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test P(Q1) = P(Q2)");
  weights_opt(iso_cmd);
  iso_cmd->add_option("--with", with, "Second weights vector")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    if (!c.quiet) err << "wps: " << e.what() << "\n" << app.help();
    return bad_input;
  }

  try {
    if (app.got_subcommand(reduce_cmd)) return cmd_reduce(c, parse_weights(weights));
    if (app.got_subcommand(fan_cmd)) return cmd_fan(c, parse_weights(weights), canonical);
    if (app.got_subcommand(rfan_cmd)) return cmd_recognize_fan(c, matrix_path);
    if (app.got_subcommand(poly_cmd)) return cmd_polytope(c, parse_weights(weights), parse_int_arg(m_text, "-m"));
    if (app.got_subcommand(rpoly_cmd)) return cmd_recognize_polytope(c, vertices_path);
    if (app.got_subcommand(lat_cmd))
      return cmd_lattice(c, parse_weights(weights), parse_int_arg(m_text, "-m"), interior, histogram);
    if (app.got_subcommand(cohom_cmd)) {
      auto q = parse_weights(weights);
      if (betti) return cmd_betti(c, q);
      if (table) return cmd_cohom_table(c, q, m_range.empty() ? "-3..3" : m_range);
      return cmd_cohom(c, q, p, qq, parse_int_arg(m_text, "-m"));
    }
    if (app.got_subcommand(div_cmd)) return cmd_divisors(c, parse_weights(weights), ample);
    if (app.got_subcommand(gor_cmd)) return cmd_gorenstein(c, parse_weights(weights));
    if (app.got_subcommand(iso_cmd)) return cmd_iso(c, parse_weights(weights), parse_weights(with));
  } catch (const io::InputError& e) {
    if (!c.quiet) err << "wps: " << e.what() << "\n";
    return bad_input;
  } catch (const std::exception& e) {
    if (!c.quiet) err << "wps: " << e.what() << "\n";
    return bad_input;
  }
  return bad_input;
}

}  // namespace wps::cli
