#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "qlab/cex.hpp"
#include "qlab/io.hpp"
#include "qlab/representation.hpp"

using namespace qlab;
using nlohmann::json;

namespace {

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string element_name(const SupLattice& s, int i) {
  if (i >= 0 && i < static_cast<int>(s.names.size()) && !s.names[i].empty()) return s.names[i];
  return std::to_string(i);
}

std::string name_set(const SupLattice& s, const std::vector<int>& xs) {
  if (xs.empty()) return "(none)";
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += element_name(s, xs[i]);
  }
  return out;
}

/// A frame element is a downset of base points; print it as the point set.
std::string downset_str(const FiniteFrame& f, int idx) {
  uint32_t mask = f.elements[idx];
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < f.base.size; ++i)
    if (mask & (1u << i)) {
      if (!first) s += ",";
      s += f.base.names.empty() || f.base.names[i].empty() ? std::to_string(i) : f.base.names[i];
      first = false;
    }
  return s + "}";
}

void emit(const std::string& format, const std::string& text, const json& j) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_check(const std::string& file, const std::string& format) {
  FiniteQuantale q = quantale_from_json(load_json_file(file));
  ClassificationReport rep = verify_axioms(q);
  bool ok = rep.is_quantale && !rep.violation;

  std::string text = "name: " + (q.name.empty() ? file : q.name) + "\n";
  text += "elements: " + std::to_string(q.size()) + "\n";
  text += "quantale: " + yn(rep.is_quantale) + "\n";
  json j{{"name", q.name.empty() ? file : q.name},
         {"elements", q.size()},
         {"quantale", rep.is_quantale}};
  if (rep.violation) {
    std::string witness = name_set(q.lattice, rep.violation->witness);
    text += "violation: " + rep.violation->law + " at " + witness;
    if (!rep.violation->detail.empty()) text += " (" + rep.violation->detail + ")";
    text += "\n";
    j["violation"] = {{"law", rep.violation->law},
                      {"witness", rep.violation->witness},
                      {"detail", rep.violation->detail}};
  }
  text += "unital: " + yn(rep.unital) + "\n";
  text += "strong: " + yn(rep.strong) + "\n";
  text += std::string("involutive: ") + tri_str(rep.involutive) + "\n";
  text += std::string("gelfand: ") + tri_str(rep.gelfand) + "\n";
  text += "strictly-two-sided: " + yn(rep.strictly_two_sided) + "\n";
  text += "locale: " + yn(rep.locale) + "\n";
  text += "trivial: " + yn(rep.trivial) + "\n";
  j["unital"] = rep.unital;
  j["strong"] = rep.strong;
  j["involutive"] = tri_str(rep.involutive);
  j["gelfand"] = tri_str(rep.gelfand);
  j["strictly_two_sided"] = rep.strictly_two_sided;
  j["locale"] = rep.locale;
  j["trivial"] = rep.trivial;
  emit(format, text, j);
  return ok ? 0 : 1;
}

int cmd_primes(const std::string& file, const std::string& format) {
  FiniteQuantale q = quantale_from_json(load_json_file(file));
  SpatialityReport rep = is_spatial_by_primes(q);

  std::string text = "name: " + (q.name.empty() ? file : q.name) + "\n";
  text += "primes: " + name_set(q.lattice, rep.primes) + "\n";
  text += "spatial: " + yn(rep.spatial) + "\n";
  json j{{"name", q.name.empty() ? file : q.name},
         {"primes", rep.primes},
         {"spatial", rep.spatial}};
  if (rep.witness) {
    text += "witness: " + element_name(q.lattice, *rep.witness) + "\n";
    j["witness"] = *rep.witness;
  }
  emit(format, text, j);
  return 0;
}

int cmd_spatialize(const std::string& file, const std::vector<std::string>& point_files,
                   const std::string& format) {
  auto q = std::make_shared<FiniteQuantale>(quantale_from_json(load_json_file(file)));
  std::vector<QuantaleHom> points;
  for (const auto& pf : point_files) points.push_back(hom_from_json(q, load_json_file(pf)));
  Spatialization sp = spatialize(*q, points);

  std::string text = "name: " + (q->name.empty() ? file : q->name) + "\n";
  text += "points: " + std::to_string(points.size()) + "\n";
  text += "classes: " + std::to_string(sp.quotient.size()) + "\n";
  for (int c = 0; c < sp.quotient.size(); ++c) {
    std::vector<int> members;
    for (int x = 0; x < q->size(); ++x)
      if (sp.class_of[x] == c) members.push_back(x);
    text += "class " + std::to_string(c) + ": rep=" +
            element_name(q->lattice, sp.representative[c]) + " members={" +
            name_set(q->lattice, members) + "}\n";
  }
  json j{{"name", q->name.empty() ? file : q->name},
         {"points", points.size()},
         {"classes", sp.quotient.size()},
         {"class_of", sp.class_of},
         {"representatives", sp.representative}};
  emit(format, text, j);
  return 0;
}

int cmd_points(const std::string& file, int carrier_cap, const std::string& format) {
  FiniteQuantale q = quantale_from_json(load_json_file(file));
  std::vector<Representation> points = enumerate_points(q, carrier_cap);

  std::string text = "name: " + (q.name.empty() ? file : q.name) + "\n";
  text += "carrier-cap: " + std::to_string(carrier_cap) + "\n";
  text += "points: " + std::to_string(points.size()) + "\n";
  json jp = json::array();
  for (size_t i = 0; i < points.size(); ++i) {
    const Representation& r = points[i];
    text += "point " + std::to_string(i) + " (carrier " + std::to_string(r.carrier().size) + "):";
    json images = json::array();
    for (int a = 0; a < q.size(); ++a) {
      const EndoMap& f = r.target->maps[r.map[a]];
      std::string vals;
      for (size_t v = 0; v < f.values.size(); ++v) {
        if (v) vals += ",";
        vals += std::to_string(f.values[v]);
      }
      text += " " + element_name(q.lattice, a) + "->[" + vals + "]";
      images.push_back(f.values);
    }
    text += "\n";
    jp.push_back({{"carrier", r.carrier().size}, {"images", images}});
  }
  json j{{"name", q.name.empty() ? file : q.name},
         {"carrier_cap", carrier_cap},
         {"count", points.size()},
         {"points", jp}};
  emit(format, text, j);
  return 0;
}

int cmd_frame_coproduct(const std::string& f1, const std::string& f2, const std::string& format) {
  FiniteFrame a = frame_of_downsets(poset_from_json(load_json_file(f1)));
  FiniteFrame b = frame_of_downsets(poset_from_json(load_json_file(f2)));
  FrameCoproduct cp = frame_coproduct(a, b);
  bool commute = check_generator_commutation(a, b, cp);

  std::string text = "left: " + std::to_string(a.size()) + " elements\n";
  text += "right: " + std::to_string(b.size()) + " elements\n";
  text += "coproduct: " + std::to_string(cp.frame.size()) + " elements\n";
  text += "generators-commute: " + yn(commute) + "\n";
  json j{{"left", a.size()},
         {"right", b.size()},
         {"coproduct", cp.frame.size()},
         {"generators_commute", commute},
         {"iota1", cp.iota1},
         {"iota2", cp.iota2}};
  emit(format, text, j);
  return 0;
}

int cmd_frame_regular(const std::string& file, const std::string& format) {
  FiniteFrame f = frame_of_downsets(poset_from_json(load_json_file(file)));
  RegularityReport rep = is_regular(f);

  std::string text = "elements: " + std::to_string(f.size()) + "\n";
  text += "regular: " + yn(rep.regular) + "\n";
  json j{{"elements", f.size()}, {"regular", rep.regular}};
  if (rep.witness) {
    text += "witness: " + downset_str(f, *rep.witness) + "\n";
    j["witness"] = downset_str(f, *rep.witness);
  }
  emit(format, text, j);
  return 0;
}

int emit_subspace(const std::string& label, const Subspace& m, const std::string& format) {
  std::string text = label + ": " + m.str() + "\nrank: " + std::to_string(m.rank()) + "\n";
  emit(format, text, json{{"result", m.str()}, {"rank", m.rank()}});
  return 0;
}

int cmd_max_gelfand(const Algebra& a, const std::string& sfile, const std::string& format) {
  Subspace m = subspace_from_json(a, load_json_file(sfile));
  bool right = is_right_ideal(m);
  bool holds = right && gelfand_identity(m);

  std::string text = "subspace: " + m.str() + "\n";
  text += "right-ideal: " + yn(right) + "\n";
  if (right) text += "gelfand-identity: " + yn(holds) + "\n";
  json j{{"subspace", m.str()}, {"right_ideal", right}};
  if (right) j["gelfand_identity"] = holds;
  emit(format, text, j);
  return right && holds ? 0 : 1;
}

int cmd_max_reflect(const Algebra& a, const std::string& format) {
  CommutativeReflection r = commutative_reflection(a);
  std::string text = "algebra: " + a.str() + "\n";
  text += "reflection: " + r.reflection.str() + "\n";
  text += "ideal-frame: " + std::to_string(r.ideals.size()) + " elements\n";
  emit(format, text,
       json{{"algebra", a.str()},
            {"reflection", r.reflection.str()},
            {"ideal_frame", r.ideals.size()}});
  return 0;
}

int cmd_cex(const std::string& name, bool all, bool list, int n, const std::string& format) {
  if (list) {
    std::string text;
    json j = json::array();
    for (const auto& s : list_scenarios()) {
      text += s.name + " (" + s.citation + "): " + s.summary + "\n";
      j.push_back({{"name", s.name}, {"citation", s.citation}, {"summary", s.summary}});
    }
    emit(format, text, j);
    return 0;
  }
  if (all) {
    bool pass = true;
    std::string text;
    json j = json::array();
    for (const auto& s : list_scenarios()) {
      Report r = run_scenario(s.name, n);
      pass = pass && r.pass;
      if (!text.empty()) text += "\n";
      text += r.text();
      j.push_back(json::parse(r.json()));
    }
    emit(format, text, j);
    return pass ? 0 : 1;
  }
  Report r = run_scenario(name, n);
  if (format == "json")
    std::cout << r.json();
  else
    std::cout << r.text();
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite quantales, frames and subspace quantales, exactly"};
  app.require_subcommand(1);
  app.fallthrough();  // let --format appear after the subcommand too
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string file, file2;
  std::vector<std::string> point_files;
  int carrier_cap = 4;

  auto* check = app.add_subcommand("check", "verify the axioms of a quantale file and classify it");
  check->add_option("file", file, "quantale JSON file")->required();

  auto* primes_cmd = app.add_subcommand("primes", "list the prime elements and test spatiality");
  primes_cmd->add_option("file", file, "quantale JSON file")->required();

  auto* spatialize_cmd =
      app.add_subcommand("spatialize", "quotient a quantale by a family of points");
  spatialize_cmd->add_option("file", file, "quantale JSON file")->required();
  spatialize_cmd->add_option("--points", point_files, "point (hom) JSON files")
      ->required()
      ->expected(-1);

  auto* points_cmd =
      app.add_subcommand("points", "enumerate irreducible representations on small carriers");
  points_cmd->add_option("file", file, "quantale JSON file")->required();
  points_cmd->add_option("--carrier-cap", carrier_cap, "largest carrier size")
      ->check(CLI::Range(1, 6))
      ->capture_default_str();

  auto* frame = app.add_subcommand("frame", "finite frames presented by posets of points");
  frame->require_subcommand(1);
  auto* coproduct = frame->add_subcommand("coproduct", "coproduct of the two generated frames");
  coproduct->add_option("left", file, "poset JSON file")->required();
  coproduct->add_option("right", file2, "poset JSON file")->required();
  auto* regular = frame->add_subcommand("regular", "test regularity of the generated frame");
  regular->add_option("file", file, "poset JSON file")->required();

  std::string algebra_spec, sub1, sub2, scenario;
  auto* max = app.add_subcommand("max", "subspace quantale of a sum of matrix blocks");
  max->add_option("algebra", algebra_spec, "algebra spec, e.g. blocks=[2,1]")->required();
  max->require_subcommand(1);
  auto* mproduct = max->add_subcommand("product", "product of two subspaces");
  mproduct->add_option("s1", sub1, "subspace JSON file")->required();
  mproduct->add_option("s2", sub2, "subspace JSON file")->required();
  auto* mclosure = max->add_subcommand("closure", "two-sided closure top*M*top");
  mclosure->add_option("s", sub1, "subspace JSON file")->required();
  auto* mgelfand = max->add_subcommand("gelfand", "check M*M~*M = M for a right ideal");
  mgelfand->add_option("s", sub1, "subspace JSON file")->required();
  max->add_subcommand("reflect", "commutative reflection and its ideal frame");

  bool cex_all = false, cex_list = false;
  int cex_n = 4;
  auto* cex = app.add_subcommand("cex", "replay the bundled computations");
  cex->add_option("name", scenario, "scenario name");
  cex->add_flag("--all", cex_all, "run every scenario, reports sorted by name");
  cex->add_flag("--list", cex_list, "list the bundled scenarios");
  cex->add_option("--n", cex_n, "coordinate count for spatialization-cn")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();

  try {
    app.parse(argc, argv);

    if (check->parsed()) return cmd_check(file, format);
    if (primes_cmd->parsed()) return cmd_primes(file, format);
    if (spatialize_cmd->parsed()) return cmd_spatialize(file, point_files, format);
    if (points_cmd->parsed()) return cmd_points(file, carrier_cap, format);
    if (frame->parsed()) {
      if (coproduct->parsed()) return cmd_frame_coproduct(file, file2, format);
      return cmd_frame_regular(file, format);
    }
    if (max->parsed()) {
      Algebra a = parse_algebra(algebra_spec);
      if (mproduct->parsed())
        return emit_subspace("product",
                             msproduct(subspace_from_json(a, load_json_file(sub1)),
                                       subspace_from_json(a, load_json_file(sub2))),
                             format);
      if (mclosure->parsed())
        return emit_subspace("closure",
                             two_sided_closure(subspace_from_json(a, load_json_file(sub1))),
                             format);
      if (mgelfand->parsed()) return cmd_max_gelfand(a, sub1, format);
      return cmd_max_reflect(a, format);
    }
    if (cex->parsed()) {
      if (!cex_list && !cex_all && scenario.empty())
        throw CLI::RequiredError("cex: a scenario name, --all, or --list");
      return cmd_cex(scenario, cex_all, cex_list, cex_n, format);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::invalid_argument& e) {
    std::string what = e.what();
    std::cerr << "error: " << what << "\n";
    return what.rfind("unknown-scenario", 0) == 0 ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
