#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "plumb/error.hpp"
#include "plumb/graph.hpp"
#include "plumb/gs.hpp"
#include "plumb/moves.hpp"
#include "plumb/open_book.hpp"
#include "plumb/rational.hpp"
#include "plumb/torus.hpp"

namespace plumb::cli {

namespace {

using Json = nlohmann::ordered_json;

// Malformed input file or flag value; exits with kUsageError.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A command whose question has a negative answer; exits with kDomainError.
struct Negative {
  std::string name;
  std::string message;
};

struct Input {
  std::string digest;
  DecoratedGraph graph;
  std::optional<RationalVector> areas;
  std::optional<RationalVector> witness;
};

struct Options {
  std::string command;
  std::string file;
  std::string mode = "concave";
  std::vector<std::string> moves;
  bool json = false;
  bool quiet = false;
  std::uint64_t seed = 0;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 unavailable");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return hex.str();
}

Rational rational_field(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (!v.is_string()) throw InputError(where + ": expected a \"p/q\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw InputError(where + ": not a rational: " + v.get<std::string>());
  }
}

std::int64_t int_field(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing \"" + key + "\"");
  if (!it->is_number_integer()) throw InputError(where + ": \"" + key + "\" must be an integer");
  return it->get<std::int64_t>();
}

std::optional<RationalVector> vertex_map(const Json& doc, const char* key, const DecoratedGraph& g) {
  const auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  if (!it->is_object()) throw InputError(std::string("\"") + key + "\" must map vertex ids to rationals");
  RationalVector out(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  for (const auto& [id, value] : it->items()) {
    const auto i = g.find_vertex(id);
    if (!i) throw InputError(std::string(key) + ": unknown vertex '" + id + "'");
    out[*i] = rational_field(value, std::string(key) + "." + id);
    seen[*i] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw InputError(std::string(key) + ": no entry for vertex '" + g.vertex(i).id + "'");
  return out;
}

Input read_input(const std::string& path, std::string& digest) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  digest = sha256_hex(text);

  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("top level must be an object");
  const auto vs = doc.find("vertices");
  const auto es = doc.find("edges");
  if (vs == doc.end() || !vs->is_array()) throw InputError("\"vertices\" must be an array");
  if (es != doc.end() && !es->is_array()) throw InputError("\"edges\" must be an array");

  RawGraph raw;
  for (std::size_t k = 0; k < vs->size(); ++k) {
    const auto& v = (*vs)[k];
    const std::string where = "vertices[" + std::to_string(k) + "]";
    if (!v.is_object()) throw InputError(where + ": expected an object");
    const auto id = v.find("id");
    if (id == v.end() || !id->is_string()) throw InputError(where + ": \"id\" must be a string");
    raw.vertices.push_back({id->get<std::string>(), int_field(v, "genus", where), int_field(v, "self_intersection", where)});
  }
  if (es != doc.end()) {
    for (std::size_t k = 0; k < es->size(); ++k) {
      const auto& e = (*es)[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw InputError("edges[" + std::to_string(k) + "]: expected a pair of vertex ids");
      raw.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  auto graph = validate_graph(raw);
  auto areas = vertex_map(doc, "areas", graph);
  auto witness = vertex_map(doc, "witness", graph);
  if (witness && !areas) throw InputError("\"witness\" requires \"areas\"");
  return {digest, std::move(graph), std::move(areas), std::move(witness)};
}

Json rational_map(const DecoratedGraph& g, const RationalVector& x) {
  Json out = Json::object();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) out[g.vertex(i).id] = to_string(x[i]);
  return out;
}

Json graph_json(const DecoratedGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices())
    vertices.push_back({{"id", v.id}, {"genus", v.genus}, {"self_intersection", v.self_intersection}});
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({g.vertex(e.u).id, g.vertex(e.v).id});
  return {{"vertices", vertices}, {"edges", edges}};
}

Json matrix_json(const SymmetricIntMatrix& q) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < q.dimension(); ++j) row.push_back(q(i, j));
    rows.push_back(row);
  }
  return rows;
}

Json sl2_json(const SL2Matrix& m) { return {{m.m11(), m.m12()}, {m.m21(), m.m22()}}; }

Json rotation_json(const RotationValue& r) {
  return {{"quarter_crossings", r.quarter_crossings},
          {"start", {r.start.x, r.start.y}},
          {"end", {r.end.x, r.end.y}},
          {"at_least_pi", r.at_least(2)},
          {"exceeds_pi", r.exceeds(2)},
          {"twisting_floor", twisting_floor(r)},
          {"approx", r.float_value}};
}

Json bundle_json(const std::optional<BundleType>& b) { return b ? Json(to_string(*b)) : Json(nullptr); }

Json sequence_json(const std::vector<std::int64_t>& s) { return Json(s); }

std::vector<std::int64_t> require_cycle(const DecoratedGraph& g) {
  auto seq = circular_sequence(g);
  if (!seq) throw Error(ErrorCode::NotCircular, "divisor is not a cycle of spheres");
  return *seq;
}

GSMode parse_mode(const std::string& m) { return m == "convex" ? GSMode::Convex : GSMode::Concave; }

Json cmd_analyze(const Input& in, std::vector<std::string>&) {
  const auto& g = in.graph;
  const auto q = intersection_matrix(g);
  const auto in_q = inertia(q);
  Json dots = Json::array();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) dots.push_back(g.vertex(i).self_intersection + g.valence(i));
  const auto seq = circular_sequence(g);
  return {{"vertices", g.vertex_count()},
          {"edges", g.edge_count()},
          {"sign_class", std::string(to_string(sign_class(g)))},
          {"dot_products", dots},
          {"intersection_matrix", matrix_json(q)},
          {"inertia", {{"b_plus", in_q.b_plus}, {"b_zero", in_q.b_zero}, {"b_minus", in_q.b_minus}}},
          {"circular", seq ? sequence_json(*seq) : Json(nullptr)},
          {"toric_minimal", is_toric_minimal(g)}};
}

Json edge_data_json(const DecoratedGraph& g, const GSEdgeData& d) {
  Json ends = Json::array();
  for (const auto& e : d.ends)
    ends.push_back({{"vertex", g.vertex(e.vertex).id},
                    {"edge", e.edge == GSEdgeEnd::half_edge ? Json("half") : Json(DecoratedGraph::edge_label(e.edge))},
                    {"s", e.s},
                    {"x", to_string(e.x)}});
  return {{"z_prime_over_pi", rational_map(g, d.z_prime)}, {"ends", ends}};
}

Json cmd_gs(const Input& in, const Options& opt, std::vector<std::string>& warnings) {
  const auto mode = parse_mode(opt.mode);
  const auto& g = in.graph;
  const auto w = check_gs(g, mode);
  if (!w)
    throw Negative{"CriterionFails", "the " + std::string(to_string(mode)) + " GS criterion fails: no witness exists"};
  Json result = {{"mode", std::string(to_string(mode))},
                 {"feasible", true},
                 {"z", rational_map(g, w->z)},
                 {"a", rational_map(g, w->a)}};
  if (mode == GSMode::Concave && is_nonnegative(sign_class(g))) {
    const auto c = nonnegative_witness(g);
    Json perturbed = Json::array();
    for (auto i : c.perturbed) perturbed.push_back(g.vertex(i).id);
    result["constructive"] = {{"z", rational_map(g, c.witness.z)},
                              {"a", rational_map(g, c.witness.a)},
                              {"perturbed", perturbed}};
  }
  if (g.edge_count() > 0) {
    result["edge_data"] = edge_data_json(g, gs_edge_data(g, w->z));
  } else {
    warnings.push_back("no edges: edge data needs a half edge");
    result["edge_data"] = nullptr;
  }
  return result;
}

Json cmd_moves(const Input& in, const Options& opt, std::vector<std::string>& warnings) {
  const bool up = opt.command == "blowup";
  std::vector<MoveRecord> moves;
  for (const auto& spec : opt.moves) {
    auto m = parse_move(spec);
    const bool is_up = m.kind == MoveKind::ToricUp || m.kind == MoveKind::InteriorUp;
    if (is_up != up)
      throw Error(ErrorCode::MalformedMove, "'" + spec + "' is not a " + (up ? "blow-up" : "blow-down"));
    moves.push_back(std::move(m));
  }
  Json applied = Json::array();
  for (const auto& m : moves) applied.push_back(format_move(m));

  if (in.areas) {
    AugmentedGraph ag(in.graph, *in.areas, in.witness);
    for (const auto& m : moves) ag = apply_move(ag, m);
    Json result = {{"moves", applied}, {"graph", graph_json(ag.graph())}};
    result["graph"]["areas"] = rational_map(ag.graph(), ag.area());
    if (ag.witness()) result["graph"]["witness"] = rational_map(ag.graph(), *ag.witness());
    return result;
  }
  auto g = in.graph;
  for (const auto& m : moves) {
    if (m.weight) {
      warnings.push_back("weight in '" + format_move(m) + "' ignored: the input has no areas");
      g = apply_move(g, MoveRecord{m.kind, m.site, std::nullopt});
    } else {
      g = apply_move(g, m);
    }
  }
  return {{"moves", applied}, {"graph", graph_json(g)}};
}

Json cmd_minimal(const Input& in) {
  Json models = Json::array();
  for (const auto& m : minimal_models(in.graph)) {
    auto entry = graph_json(m);
    const auto seq = circular_sequence(m);
    entry["circular"] = seq ? sequence_json(*seq) : Json(nullptr);
    models.push_back(entry);
  }
  return {{"count", models.size()}, {"models", models}};
}

Json cmd_openbook(const Input& in, const Options& opt) {
  const auto side = parse_mode(opt.mode);
  const auto ob = build_open_book(in.graph, side);
  const auto inv = page_invariants(ob);
  const auto dist = distribute_twists(in.graph, side);
  Json monodromy = Json::array();
  for (const auto& t : ob.monodromy) monodromy.push_back({{"curve", t.curve}, {"sign", t.sign}});
  Json pieces = Json::array();
  for (const auto& p : ob.pieces) pieces.push_back({{"vertex", p.vertex}, {"genus", p.genus}, {"boundary", p.boundary}});
  Json twists = Json::array();
  for (const auto& e : dist.entries)
    twists.push_back({{"vertex", in.graph.vertex(e.vertex).id},
                      {"edge", DecoratedGraph::edge_label(e.edge)},
                      {"s", e.s},
                      {"multiplicity", e.multiplicity}});
  return {{"side", std::string(to_string(side))},
          {"page", {{"genus", inv.genus}, {"boundary", inv.boundary_count}}},
          {"monodromy", monodromy},
          {"euler_characteristic", inv.euler_characteristic},
          {"pieces", pieces},
          {"twists", twists}};
}

Json cmd_word(const Input& in) {
  const auto seq = require_cycle(in.graph);
  const auto w = word_of_divisor(seq);
  const auto a = phi(w);
  const auto best = best_cyclic_rotation(w);
  return {{"sequence", sequence_json(seq)},
          {"word", format_word(w)},
          {"matrix", sl2_json(a)},
          {"trace", a.trace()},
          {"bundle", to_string(bundle_type(a))},
          {"rotation", rotation_json(rotation(w))},
          {"best_rotation", {{"shift", best.shift}, {"word", format_word(best.word)}, {"rotation", rotation_json(best.rotation)}}}};
}

Json cmd_tight(const Input& in) {
  const auto v = classify_tightness(in.graph);
  const auto& ev = v.evidence;
  Json evidence = {{"input", sequence_json(ev.input)}};
  if (v.outcome != TightnessOutcome::NotApplicable) {
    evidence["representative"] = sequence_json(ev.representative);
    evidence["reduced"] = sequence_json(ev.reduced);
  }
  if (!ev.word.empty()) {
    evidence["word"] = format_word(ev.word);
    evidence["best_word"] = format_word(ev.best_word);
    Json shifts = Json::array();
    for (std::size_t k = 0; k < ev.word.size(); ++k) {
      const auto r = rotation(rewrite(ev.word, CyclicPermute{static_cast<std::ptrdiff_t>(k)}));
      shifts.push_back({{"shift", k},
                        {"quarter_crossings", r.quarter_crossings},
                        {"end", {r.end.x, r.end.y}},
                        {"at_least_pi", r.at_least(2)}});
    }
    evidence["cyclic_rotations"] = shifts;
  }
  if (ev.rotation) evidence["rotation"] = rotation_json(*ev.rotation);
  if (ev.twisting_at_least_pi) evidence["twisting_at_least_pi"] = *ev.twisting_at_least_pi;
  if (ev.monodromy) evidence["monodromy"] = sl2_json(*ev.monodromy);
  if (ev.bundle) {
    evidence["bundle"] = bundle_json(ev.bundle);
    evidence["inverse_bundle"] = bundle_json(ev.inverse_bundle);
    evidence["negated_bundle"] = bundle_json(ev.negated_bundle);
    if (ev.bundle->kind == BundleKind::Parabolic) evidence["parabolic_invariant"] = ev.bundle->invariant;
  }
  if (!ev.citation.empty()) evidence["citation"] = ev.citation;
  evidence["notes"] = ev.notes;
  return {{"outcome", std::string(to_string(v.outcome))},
          {"reason", std::string(to_string(v.reason))},
          {"evidence", evidence}};
}

std::string dot_text(const DecoratedGraph& g) {
  std::ostringstream out;
  out << "graph plumbing {\n";
  for (const auto& v : g.vertices())
    out << "  " << std::quoted(v.id) << " [label=\"s=" << v.self_intersection << ", g=" << v.genus << "\"];\n";
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    out << "  " << std::quoted(g.vertex(edge.u).id) << " -- " << std::quoted(g.vertex(edge.v).id) << " [label=\""
        << DecoratedGraph::edge_label(e) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

void print_text(const Json& result, std::ostream& out) {
  for (const auto& [key, value] : result.items()) {
    if (value.is_string())
      out << key << ": " << value.get<std::string>() << '\n';
    else
      out << key << ": " << value.dump() << '\n';
  }
}

void emit_error(const Options& opt, const std::string& digest, const std::string& name, const std::string& message,
                std::ostream& out, std::ostream& err) {
  if (opt.json) {
    Json report = {{"command", opt.command}, {"input_digest", digest.empty() ? Json(nullptr) : Json(digest)},
                   {"error", {{"name", name}, {"message", message}}}};
    out << report.dump(2) << '\n';
  } else {
    err << "error: " << name << ": " << message << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Plumbing divisor calculus: GS criterion, blow-up moves, open books, torus bundle words", "plumb"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "Emit a JSON report");
  app.add_flag("--quiet", opt.quiet, "Suppress warnings");
  app.add_option("--seed", opt.seed, "Seed for randomized tie-breaking (none is randomized)");

  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", opt.file, "Graph JSON file")->required();
    return sub;
  };
  add("analyze", "Sign class, intersection matrix, inertia and circularity");
  add("gs", "GS criterion witness")
      ->add_option("--mode", opt.mode, "concave or convex")
      ->check(CLI::IsMember({"concave", "convex"}));
  add("blowup", "Apply blow-ups")->add_option("--move", opt.moves, "MOVE like toric_up:e1[:w=1/2]")->required();
  add("blowdown", "Apply blow-downs")->add_option("--move", opt.moves, "MOVE like toric_down:v2")->required();
  add("minimal", "Toric minimal models up to isomorphism");
  add("openbook", "Supporting open book")
      ->add_option("--side", opt.mode, "concave or convex")
      ->check(CLI::IsMember({"concave", "convex"}));
  add("word", "SL(2,Z) word, monodromy and rotation of a circular divisor");
  add("tight", "Universal tightness of the boundary torus bundle");
  add("dot", "Graphviz export");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsageError;
  }
  opt.command = app.get_subcommands().front()->get_name();

  std::string digest;
  try {
    const auto in = read_input(opt.file, digest);
    std::vector<std::string> warnings;
    Json result;
    if (opt.command == "analyze") {
      result = cmd_analyze(in, warnings);
    } else if (opt.command == "gs") {
      result = cmd_gs(in, opt, warnings);
    } else if (opt.command == "blowup" || opt.command == "blowdown") {
      result = cmd_moves(in, opt, warnings);
    } else if (opt.command == "minimal") {
      result = cmd_minimal(in);
    } else if (opt.command == "openbook") {
      result = cmd_openbook(in, opt);
    } else if (opt.command == "word") {
      result = cmd_word(in);
    } else if (opt.command == "tight") {
      result = cmd_tight(in);
    } else {
      result = {{"dot", dot_text(in.graph)}};
    }
    if (in.areas && opt.command != "blowup" && opt.command != "blowdown")
      warnings.push_back("areas are only used by blowup/blowdown");

    if (opt.json) {
      Json report = {{"command", opt.command}, {"input_digest", digest}, {"result", result}, {"warnings", warnings}};
      out << report.dump(2) << '\n';
    } else {
      if (opt.command == "dot")
        out << result["dot"].get<std::string>();
      else
        print_text(result, out);
      if (!opt.quiet)
        for (const auto& w : warnings) err << "warning: " << w << '\n';
    }
    return kSuccess;
  } catch (const InputError& e) {
    emit_error(opt, digest, "ParseError", e.what(), out, err);
    return kUsageError;
  } catch (const Negative& e) {
    emit_error(opt, digest, e.name, e.message, out, err);
    return kDomainError;
  } catch (const Error& e) {
    const std::string what = e.what();
    const auto prefix = std::string(e.name()) + ": ";
    emit_error(opt, digest, std::string(e.name()), what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what, out,
               err);
    return kDomainError;
  } catch (const std::exception& e) {
    emit_error(opt, digest, "InternalError", e.what(), out, err);
    return kDomainError;
  }
}

}  // namespace plumb::cli
