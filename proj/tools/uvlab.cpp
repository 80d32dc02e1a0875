// uvlab: finite Stone-duality workbench.  Builds dual spaces of finite
// Boolean algebras, classifies finite spaces, translates dictionary rows,
// and machine-verifies the theorem battery at configurable desk-scale
// bounds.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "uvlab/applications.hpp"
#include "uvlab/dictionary.hpp"
#include "uvlab/duality.hpp"
#include "uvlab/enumerate.hpp"
#include "uvlab/errors.hpp"
#include "uvlab/hyperlocale.hpp"
#include "uvlab/io.hpp"
#include "uvlab/kernels.hpp"
#include "uvlab/limits.hpp"
#include "uvlab/verify.hpp"

using nlohmann::json;
using namespace uvlab;

namespace {

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  int jobs = 1;
  bool force_sizes = false;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write " + path);
  out << text;
}

json space_with_points(const DualSpace& d) {
  json doc = emit_space(d.space);
  json filters = json::array();
  for (std::size_t i = 0; i < d.point_filters.size(); ++i) {
    json f;
    f["point"] = d.space.order.label(i);
    json members = json::array();
    for (int e : mask_elems(d.point_filters[i]))
      members.push_back(d.algebra.element_name(static_cast<Mask>(e)));
    f["filter"] = std::move(members);
    filters.push_back(std::move(f));
  }
  doc["point_filters"] = std::move(filters);
  return doc;
}

std::string names_of(const FiniteSpace& x, Mask set) {
  std::string out = "{";
  for (int p : mask_elems(set)) {
    if (out.size() > 1) out += ",";
    out += x.order.label(p);
  }
  return out + "}";
}

int run(int argc, char** argv) {
  CLI::App app{"finite Stone duality workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "seed for randomized generators");
  app.add_option("--jobs", opt.jobs, "worker threads for sweeps")
      ->check(CLI::PositiveNumber);
  app.add_flag("--force-sizes", opt.force_sizes,
               "acknowledge and lift the default size limits");
  std::string kernel;
  app.add_option("--kernel", kernel, "set kernel: scalar or avx2");

  // gen
  auto* gen = app.add_subcommand("gen", "generate instance documents");
  std::string gen_kind = "powerset", gen_out;
  int gen_atoms = 2, gen_generators = 1;
  gen->add_option("--kind", gen_kind, "powerset, free or random-subalgebra")
      ->check(CLI::IsMember({"powerset", "free", "random-subalgebra"}));
  gen->add_option("-k,--atoms", gen_atoms, "atom count");
  gen->add_option("-g,--generators", gen_generators,
                  "generator count for free algebras");
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");

  // dual
  auto* dual = app.add_subcommand("dual", "dual space of an algebra");
  std::string dual_in, dual_out;
  dual->add_option("ba", dual_in, "ba.json input")->required();
  dual->add_option("-o,--out", dual_out, "output file (default stdout)");

  // check
  auto* check = app.add_subcommand("check", "classify a space or map");
  std::string check_what, check_in;
  check->add_option("what", check_what, "spectral, uv or map")
      ->required()
      ->check(CLI::IsMember({"spectral", "uv", "map"}));
  check->add_option("input", check_in, "space.json or map.json")->required();

  // dict
  auto* dict = app.add_subcommand("dict", "run a dictionary row");
  std::string dict_row, dict_in, dict_in2;
  dict->add_option("row", dict_row,
                   "eta|zeta|principal|maximal|relativization|meet-join|"
                   "atoms|canonical-extension|macneille|sum-product")
      ->required();
  dict->add_option("ba", dict_in, "ba.json input")->required();
  dict->add_option("ba2", dict_in2, "second ba.json (sum-product)");

  // sum
  auto* sum = app.add_subcommand("sum", "UV-sum of two spaces");
  std::string sum_a, sum_b, sum_out;
  sum->add_option("left", sum_a, "space.json")->required();
  sum->add_option("right", sum_b, "space.json")->required();
  sum->add_option("-o,--out", sum_out, "output file (default stdout)");

  // partition
  auto* part = app.add_subcommand("partition", "regular partition");
  std::string part_in;
  int part_n = 0;
  part->add_option("space", part_in, "space.json")->required();
  part->add_option("-n", part_n, "index bound (yields n+1 blocks)")
      ->required();

  // embed
  auto* embed = app.add_subcommand("embed", "surjection onto a small dual");
  std::string embed_in;
  int embed_n = 1;
  embed->add_option("space", embed_in, "space.json")->required();
  embed->add_option("-n", embed_n, "target atom count")->required();

  // complete-split
  auto* split = app.add_subcommand("complete-split",
                                   "atomic/atomless decomposition");
  std::string split_in;
  split->add_option("space", split_in, "space.json")->required();

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "Hasse diagram as DOT");
  std::string dot_in, dot_out;
  dot->add_option("input", dot_in, "poset.json / space.json / ba.json")
      ->required();
  dot->add_option("-o,--out", dot_out, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "run the theorem battery");
  Bounds bounds;
  bool timings = false;
  verify->add_option("--max-atoms", bounds.max_atoms, "atom bound");
  verify->add_option("--max-poset", bounds.max_poset, "poset size bound");
  verify->add_flag("--timings", timings, "include per-record timings");

  // replay
  auto* replay = app.add_subcommand("replay", "re-run a failure payload");
  std::string replay_in;
  replay->add_option("payload", replay_in, "payload file or '-' for stdin")
      ->required();

  // kernels
  auto* kernels_cmd =
      app.add_subcommand("kernels", "show the available kernel variants");
  bool kernel_bench = false;
  kernels_cmd->add_flag("--bench", kernel_bench,
                        "time each variant on a classification sweep");

  CLI11_PARSE(app, argc, argv);

  if (const char* env = std::getenv("UVLAB_FAULT"))
    if (std::string(env) == "neg")
      testing::set_fault(testing::Fault::CorruptNeg);
  if (!kernel.empty()) kernels::select(kernel);
  if (opt.force_sizes) {
    // Atoms stay at 6: the 64-bit subset representation caps dual spaces
    // at 63 points.  Poset sweeps may go wider.
    limits().max_poset_labeled = 8;
    limits().max_poset_iso = 8;
  }

  if (gen->parsed()) {
    FiniteBA a;
    if (gen_kind == "powerset") {
      a = powerset_ba(gen_atoms);
    } else if (gen_kind == "free") {
      // the free algebra on g generators has 2^g atoms; 3 generators would
      // already need 8 atoms, past the 63-point dual cap
      if (gen_generators < 0 || gen_generators > 2)
        throw SizeLimit("free algebras supported for 0..2 generators");
      a = powerset_ba(1 << gen_generators);
    } else {
      // random subalgebra of the k-atom algebra
      FiniteBA big = powerset_ba(gen_atoms);
      std::mt19937_64 rng(opt.seed);
      Mask seed_elems = 0;
      std::uniform_int_distribution<Mask> pick(0, big.one());
      for (int i = 0; i < 2; ++i) seed_elems |= Mask{1} << pick(rng);
      a = subalgebra_generated(big, seed_elems).ba;
    }
    write_output(gen_out, emit_ba(a).dump(2) + "\n");
    return 0;
  }

  if (dual->parsed()) {
    FiniteBA a = parse_ba(load_json_file(dual_in));
    DualSpace d = uv_dual(a);
    write_output(dual_out, space_with_points(d).dump(2) + "\n");
    return 0;
  }

  if (check->parsed()) {
    json out;
    if (check_what == "map") {
      std::string dir =
          std::filesystem::path(check_in).parent_path().string();
      SpaceMap f = parse_map(load_json_file(check_in), dir);
      out["spectral"] = is_spectral_map(f);
      out["uv_map"] = is_uv_map(f);
      out["uv_embedding"] = is_uv_embedding(f);
    } else {
      FiniteSpace x = parse_space(load_json_file(check_in));
      if (check_what == "spectral") {
        SpectralReport r = is_spectral(x);
        out["spectral"] = r.ok();
        out["compact"] = r.compact;
        out["t0"] = r.t0;
        out["coherent"] = r.coherent_intersections && r.coherent_base;
        out["sober"] = r.sober;
        out["failures"] = r.failures;
      } else {
        UVReport r = is_uv_space(x);
        out["uv_space"] = r.ok();
        out["t0"] = r.t0;
        out["intersection_closed"] = r.inter_closed;
        out["neg_closed"] = r.neg_closed;
        out["basis"] = r.basis;
        out["filters_realized"] = r.filters_realized;
        out["failures"] = r.failures;
      }
    }
    if (opt.format == "json") {
      std::cout << out.dump(2) << "\n";
    } else {
      for (auto it = out.begin(); it != out.end(); ++it)
        std::cout << it.key() << ": " << it.value().dump() << "\n";
    }
    return 0;
  }

  if (dict->parsed()) {
    FiniteBA a = parse_ba(load_json_file(dict_in));
    DictReport r;
    if (dict_row == "sum-product") {
      if (dict_in2.empty())
        throw SchemaError("sum-product needs two algebras");
      r = check_sum_product(a, parse_ba(load_json_file(dict_in2)));
    } else {
      DualSpace d = uv_dual(a);
      const FiniteSpace& x = d.space;
      if (dict_row == "maximal") {
        r = maximal_rows(d);
      } else if (dict_row == "relativization") {
        COROAlgebra cx = coro_algebra(x);
        r.row = "relativization";
        r.pass = true;
        for (Mask e = 1; e < static_cast<Mask>(a.size()); ++e) {
          DictReport one = relativization_row(x, cx.sets[e]);
          r.pass &= one.pass;
          r.left_census += one.left_census;
          r.right_census += one.right_census;
        }
      } else if (dict_row == "meet-join") {
        COROAlgebra cx = coro_algebra(x);
        std::vector<Mask> opens = open_sets(x);
        r.row = "meet-join";
        r.pass = is_complete_uv(x);
        for (Mask sub = 0; sub < (Mask{1} << cx.ba.size()); ++sub) {
          std::vector<Mask> fam;
          for (int i : mask_elems(sub)) fam.push_back(cx.sets[i]);
          r.pass &= meet_join_formulas(x, fam, cx, opens).pass;
        }
        r.left_census = 1 << cx.ba.size();
        r.right_census = r.left_census;
      } else if (dict_row == "atoms") {
        r = atoms_row(x);
      } else if (dict_row == "canonical-extension") {
        FiniteBA ce = canonical_extension(x);
        r.row = "canonical-extension";
        r.left_census = ce.size();
        r.right_census = a.size();
        r.pass = ce.atoms == a.atoms;
      } else if (dict_row == "macneille") {
        r = macneille(x);
      } else if (dict_row == "eta") {
        r.row = "eta";
        auto filters = enumerate_proper_filters(a);
        r.left_census = static_cast<int>(filters.size());
        r.pass = true;
        for (const BAFilter& f : filters) (void)eta(d, f);
        r.right_census = x.points();
      } else if (dict_row == "zeta") {
        r.row = "zeta";
        auto ideals = enumerate_ideals(a);
        r.left_census = static_cast<int>(ideals.size());
        r.pass = true;
        for (const BAIdeal& i : ideals) (void)zeta(d, i);
        r.right_census = static_cast<int>(oro(x).size());
        r.pass = r.left_census == r.right_census;
      } else if (dict_row == "principal") {
        r.row = "principal";
        r.left_census = a.size();
        r.right_census = static_cast<int>(coro(x).size());
        r.pass = r.left_census == r.right_census;
      } else {
        throw SchemaError("unknown dictionary row: " + dict_row);
      }
    }
    if (opt.format == "json") {
      json out{{"row", r.row},
               {"left", r.left_census},
               {"right", r.right_census},
               {"pass", r.pass},
               {"detail", r.detail}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << r.row << ": left=" << r.left_census
                << " right=" << r.right_census
                << (r.pass ? " PASS" : " FAIL") << "\n";
    }
    return r.pass ? 0 : 1;
  }

  if (sum->parsed()) {
    FiniteSpace x = parse_space(load_json_file(sum_a));
    FiniteSpace y = parse_space(load_json_file(sum_b));
    UVSum s = uv_sum(x, y);
    write_output(sum_out, emit_space(s.space).dump(2) + "\n");
    return 0;
  }

  if (part->parsed()) {
    FiniteSpace x = parse_space(load_json_file(part_in));
    RegularPartition p = regular_partition(x, part_n);
    std::cout << emit_partition(x, p).dump(2) << "\n";
    return 0;
  }

  if (embed->parsed()) {
    FiniteSpace x = parse_space(load_json_file(embed_in));
    EmbedResult e = embed_bn(x, embed_n);
    json out;
    out["target"] = emit_space(e.target.space);
    json m = json::object();
    for (int p = 0; p < x.points(); ++p)
      m[x.order.label(p)] = e.target.space.order.label(e.onto.map[p]);
    out["map"] = std::move(m);
    out["embedding_atoms"] = e.target.algebra.atoms;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (split->parsed()) {
    FiniteSpace x = parse_space(load_json_file(split_in));
    CompleteSplit s = split_complete(x);
    json out;
    out["dense_part"] = names_of(x, s.dense_part);
    out["trivial"] = s.trivial;
    out["atomic_points"] = s.atomic_part.space.points();
    out["atomless_points"] = s.atomless_part.space.points();
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (dot->parsed()) {
    json doc = load_json_file(dot_in);
    Poset p;
    if (doc.contains("atoms") || doc.contains("carrier"))
      p = uv_dual(parse_ba(doc)).space.order;
    else
      p = parse_poset(doc);
    write_output(dot_out, export_dot(p));
    return 0;
  }

  if (verify->parsed()) {
    bounds.seed = opt.seed;
    bounds.jobs = opt.jobs;
    if (!opt.force_sizes &&
        (bounds.max_atoms > limits().max_atoms ||
         bounds.max_poset > limits().max_poset_labeled))
      throw SizeLimit("bounds exceed the default limits; pass --force-sizes");
    VerificationRun run = verify_all(bounds);
    if (opt.format == "json") {
      std::cout << records_to_jsonl(run, timings);
    } else {
      for (const auto& r : run.records)
        std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.theorem << " ["
                  << r.instance << "] checked=" << r.checked
                  << (r.pass ? "" : "  " + r.detail) << "\n";
      std::cout << (run.all_pass() ? "all theorems hold" : "FAILURES found")
                << " (" << run.total_checked() << " instances)\n";
    }
    return run.all_pass() ? 0 : 1;
  }

  if (replay->parsed()) {
    std::string payload;
    if (replay_in == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      payload = ss.str();
    } else {
      std::ifstream in(replay_in);
      if (!in) throw SchemaError("cannot open " + replay_in);
      std::ostringstream ss;
      ss << in.rdbuf();
      payload = ss.str();
    }
    // Accept either a bare payload or a full report line.
    json doc = json::parse(payload, nullptr, false);
    if (doc.is_object() && doc.contains("payload")) doc = doc["payload"];
    std::string message;
    bool ok = replay_payload(doc.is_discarded() ? payload : doc.dump(),
                             &message);
    std::cout << (ok ? "pass: " : "FAIL: ") << message << "\n";
    return ok ? 0 : 1;
  }

  if (kernels_cmd->parsed()) {
    std::cout << "active: " << kernels::active().name << "\n";
    std::cout << "scalar: available\n";
    std::cout << "avx2: "
              << (kernels::avx2_available() ? "available" : "not supported")
              << "\n";
    if (kernel_bench) {
      // classification throughput on a fixed random poset, both widths
      std::mt19937_64 rng(opt.seed ? opt.seed : 12345);
      for (int n : {12, 48}) {
        std::vector<Mask> up(n);
        for (int i = 0; i < n; ++i) up[i] = Mask{1} << i;
        std::uniform_int_distribution<int> coin(0, 3);
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            if (coin(rng) == 0) up[i] |= Mask{1} << j;
        for (bool changed = true; changed;) {
          changed = false;
          for (int i = 0; i < n; ++i) {
            Mask row = up[i];
            for (int y : mask_elems(row)) row |= up[y];
            if (row != up[i]) up[i] = row, changed = true;
          }
        }
        constexpr std::size_t kCount = 1 << 22;
        std::vector<Mask> cand(kCount);
        std::uniform_int_distribution<Mask> pick(0, full_mask(n));
        for (auto& c : cand) c = pick(rng);
        std::vector<std::uint8_t> flags(kCount);
        auto bench = [&](const kernels::Kernel& k) {
          auto t0 = std::chrono::steady_clock::now();
          k.ro_upset_flags(up.data(), n, cand.data(), flags.data(), kCount);
          double s = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
          std::uint64_t hits = 0;
          for (auto f : flags) hits += f;
          std::printf("  %-6s n=%-2d  %7.1f Mcand/s  (%llu hits)\n", k.name,
                      n, kCount / s / 1e6,
                      static_cast<unsigned long long>(hits));
        };
        bench(kernels::scalar_kernel());
        if (const kernels::Kernel* simd = kernels::avx2_kernel())
          bench(*simd);
      }
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CounterexampleError& e) {
    std::cerr << "counterexample: " << e.what() << "\n";
    std::cerr << e.payload() << "\n";
    return 1;
  } catch (const SizeLimit& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
