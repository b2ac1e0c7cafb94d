#include <algorithm>
#include <atomic>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ddm/errors.hpp"
#include "ddm/serialize.hpp"
#include "ddm/theorems.hpp"

using namespace ddm;
using nlohmann::json;

namespace {

struct RunConfig {
  int m = 12;
  std::string index;
  std::string weight;
  std::string output = "table";
  bool full = false;
  bool unsafe_m = false;
  unsigned threads = 0;
};

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

json index_json(const IndexSet& I) {
  json out = json::array();
  for (const auto& p : I.pairs()) out.push_back({p.i, p.k});
  return out;
}

int cmd_weights(const RunConfig& cfg) {
  const Dihedral g(cfg.m, cfg.unsafe_m);
  const auto& cat = Catalog::get(g);
  std::size_t sum_sq = 0;
  json rows = json::array();
  for (const auto& e : cat.entries()) {
    const std::size_t d = e.module.dim();
    sum_sq += d * d;
    std::vector<GroupElt> degs = e.module.degree;
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    json dj = json::array();
    for (const auto& h : degs) dj.push_back(g.to_string(h));
    rows.push_back({{"label", label_to_string(e.label)}, {"dimension", d}, {"degrees", dj}});
  }
  if (cfg.output == "json") {
    std::cout << json{{"m", cfg.m}, {"count", rows.size()}, {"sum_dim_squared", sum_sq}, {"weights", rows}}.dump(2)
              << "\n";
  } else {
    for (const auto& r : rows) {
      std::string degs;
      for (const auto& d : r["degrees"]) degs += (degs.empty() ? "" : " ") + d.get<std::string>();
      std::cout << std::left << std::setw(12) << r["label"].get<std::string>() << std::setw(4)
                << r["dimension"].get<std::size_t>() << degs << "\n";
    }
    std::cout << "count " << rows.size() << ", sum of squared dimensions " << sum_sq << "\n";
  }
  return 0;
}

int cmd_tensor(const RunConfig& cfg, const std::string& a, const std::string& b) {
  const Dihedral g(cfg.m, cfg.unsafe_m);
  const WeightLabel la = parse_label(g, a);
  const WeightLabel lb = parse_label(g, b);
  const auto parts = decompose_multiplicities(tensor_dd(build_weight(g, la), build_weight(g, lb)));
  if (cfg.output == "json") {
    json s = json::array();
    for (const auto& [label, mult] : parts) s.push_back({{"label", label_to_string(label)}, {"mult", mult}});
    std::cout << json{{"m", cfg.m}, {"left", a}, {"right", b}, {"summands", s}}.dump(2) << "\n";
  } else {
    std::string line;
    for (const auto& [label, mult] : parts) {
      if (!line.empty()) line += " + ";
      line += (mult > 1 ? std::to_string(mult) + "*" : "") + label_to_string(label);
    }
    std::cout << label_to_string(la) << " (x) " << label_to_string(lb) << " = " << line << "\n";
  }
  return 0;
}

int cmd_simple(const RunConfig& cfg) {
  const Dihedral g(cfg.m, cfg.unsafe_m);
  const IndexSet I = parse_index_set(g, cfg.index);
  const WeightLabel lambda = parse_label(g, cfg.weight);
  const QDModule verma = build_verma(g, I, lambda);
  const QDModule top = head(verma);
  const SocleResult soc = socle(verma);
  const GradedCharacter chr = graded_character(top);
  json checks = {{"relations_verma", check_relations(verma).ok}, {"relations_head", check_relations(top).ok}};
  if (cfg.output == "json") {
    json out = {{"m", cfg.m},
                {"index_set", index_json(I)},
                {"weight", label_to_string(lambda)},
                {"dimension", top.dim()},
                {"graded_character", character_to_json(g, chr)},
                {"socle", character_to_json(g, soc.character)},
                {"checks", checks}};
    if (cfg.full) out["verma"] = character_to_json(g, graded_character(verma));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "L(" << label_to_string(lambda) << ") over " << index_set_to_string(I) << ", dim " << top.dim()
              << "\n"
              << character_table(g, chr) << "socle, dim " << soc.module.dim() << "\n"
              << character_table(g, soc.character);
    if (cfg.full) std::cout << "verma, dim " << verma.dim() << "\n" << character_table(g, graded_character(verma));
  }
  return checks["relations_verma"].get<bool>() && checks["relations_head"].get<bool>() ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, const std::string& weights, bool spherical, bool tensor_rigid,
               const std::string& epsilon) {
  const Dihedral g(cfg.m, cfg.unsafe_m);
  const IndexSet I = parse_index_set(g, cfg.index);
  std::vector<WeightLabel> labels;
  if (weights == "all") {
    labels = Catalog::get(g).labels();
  } else {
    std::string_view rest = weights;
    while (!rest.empty()) {
      const auto semi = rest.find(';');
      labels.push_back(parse_label(g, rest.substr(0, semi)));
      rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
    }
  }
  VerifyOptions opts;
  if (epsilon == "pair-count") {
    opts.rule = EpsilonRule::PairCount;
  } else if (epsilon != "integer-sum") {
    throw ParseError("--epsilon must be integer-sum or pair-count");
  }
  std::vector<SimpleReport> reports(labels.size());
  parallel_for(labels.size(), cfg.threads, [&](std::size_t c) { reports[c] = verify_simple(g, I, labels[c], opts); });

  bool all_ok = true;
  json cases = json::array();
  std::size_t matched = 0;
  for (const auto& r : reports) {
    matched += r.ok() ? 1 : 0;
    all_ok = all_ok && r.ok();
    cases.push_back({{"case", label_to_string(r.weight)},
                     {"status", r.ok() ? "match" : "mismatch"},
                     {"expected", character_to_json(g, r.predicted)},
                     {"computed", character_to_json(g, r.head)},
                     {"failures", r.failures}});
  }
  json extra;
  if (spherical) {
    const bool sph = is_spherical(I);
    bool pivot_everywhere = true;
    for (const auto& lab : labels) {
      pivot_everywhere = pivot_everywhere && pivot_check(build_verma(g, I, lab)).candidate_ok[2];
    }
    extra["spherical"] = {{"predicted", sph}, {"pivot_holds", pivot_everywhere}};
    all_ok = all_ok && sph == pivot_everywhere;
  }
  if (tensor_rigid) {
    json tj = json::array();
    for (const auto& mu : labels) {
      const bool rigid = !mu.is_mrst() && std::all_of(I.pairs().begin(), I.pairs().end(), [&](const Pair& p) {
        return classify_weight(g, mu, p) == WeightClass::Rigid;
      });
      if (!rigid) continue;
      for (const auto& lam : labels) {
        const auto r = check_rigid_tensor(g, I, mu, lam);
        all_ok = all_ok && r.ok();
        tj.push_back({{"mu", label_to_string(mu)}, {"lambda", label_to_string(lam)}, {"status", r.ok() ? "match" : "mismatch"}});
      }
    }
    extra["tensor_rigid"] = tj;
  }
  if (cfg.output == "json") {
    std::cout << json{{"m", cfg.m}, {"index_set", index_json(I)}, {"cases", cases}, {"checks", extra}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << std::left << std::setw(12) << label_to_string(r.weight) << std::setw(10)
                << (r.ok() ? "match" : "mismatch") << "dim " << r.head_dim << "\n";
      for (const auto& f : r.failures) std::cout << "    " << f << "\n";
    }
    std::cout << matched << "/" << reports.size() << " match\n";
    if (extra.contains("spherical")) {
      std::cout << "spherical: predicted " << extra["spherical"]["predicted"] << ", pivot "
                << extra["spherical"]["pivot_holds"] << "\n";
    }
    if (extra.contains("tensor_rigid")) {
      std::size_t ok = 0;
      for (const auto& t : extra["tensor_rigid"]) ok += t["status"] == "match" ? 1 : 0;
      std::cout << "rigid tensors: " << ok << "/" << extra["tensor_rigid"].size() << " match\n";
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_spherical(const RunConfig& cfg) {
  const Dihedral g(cfg.m, cfg.unsafe_m);
  const IndexSet I = parse_index_set(g, cfg.index);
  const bool sph = is_spherical(I);
  const WeightLabel lambda = cfg.weight.empty() ? WeightLabel::e_chi(1) : parse_label(g, cfg.weight);
  const PivotReport rep = pivot_check(build_verma(g, I, lambda));
  json cand = json::object();
  for (int j = 1; j <= 4; ++j) cand["chi" + std::to_string(j)] = rep.candidate_ok[static_cast<std::size_t>(j - 1)];
  if (cfg.output == "json") {
    std::cout << json{{"m", cfg.m}, {"index_set", index_json(I)}, {"spherical", sph}, {"pivot_candidates", cand}}.dump(2)
              << "\n";
  } else {
    std::cout << index_set_to_string(I) << ": " << (sph ? "spherical" : "non-spherical") << "\n";
    for (auto it = cand.begin(); it != cand.end(); ++it) {
      std::cout << "  y^n " << it.key() << ": " << (it.value().get<bool>() ? "pivot" : "fails") << "\n";
    }
  }
  return sph == rep.candidate_ok[2] ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Drinfeld doubles over dihedral groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "modulus m of D_m")->capture_default_str();
    sub->add_option("--output", cfg.output, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_flag("--unsafe-m", cfg.unsafe_m, "allow any even m >= 4");
    sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  };
  auto* weights = app.add_subcommand("weights", "list the weight catalog");
  common(weights);
  std::string left;
  std::string right;
  auto* tensor = app.add_subcommand("tensor", "decompose a tensor product of two weights");
  common(tensor);
  tensor->add_option("left", left, "first weight")->required();
  tensor->add_option("right", right, "second weight")->required();
  auto* simple = app.add_subcommand("simple", "graded character of a simple module");
  common(simple);
  simple->add_option("--index", cfg.index, "index set, e.g. (2,3)")->required();
  simple->add_option("--weight", cfg.weight, "weight label")->required();
  simple->add_flag("--full", cfg.full, "also print the Verma module");
  std::string weight_list = "all";
  std::string epsilon = "integer-sum";
  bool spherical = false;
  bool tensor_rigid = false;
  auto* verify = app.add_subcommand("verify", "compare computed simples with the closed forms");
  common(verify);
  verify->add_option("--index", cfg.index, "index set")->required();
  verify->add_option("--weights", weight_list, "all, or labels separated by ';'");
  verify->add_option("--epsilon", epsilon, "integer-sum or pair-count");
  verify->add_flag("--spherical", spherical, "also compare sphericality with the pivot");
  verify->add_flag("--tensor-rigid", tensor_rigid, "also check tensor products with rigid simples");
  auto* sph = app.add_subcommand("spherical", "sphericality and pivot candidates");
  common(sph);
  sph->add_option("--index", cfg.index, "index set")->required();
  sph->add_option("--weight", cfg.weight, "weight of the Verma module tested (default e:chi1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*weights) return cmd_weights(cfg);
    if (*tensor) return cmd_tensor(cfg, left, right);
    if (*simple) return cmd_simple(cfg);
    if (*verify) return cmd_verify(cfg, weight_list, spherical, tensor_rigid, epsilon);
    if (*sph) return cmd_spherical(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
