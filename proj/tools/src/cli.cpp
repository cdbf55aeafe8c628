#include "coxa_tools/cli.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

namespace coxa::cli {

using nlohmann::json;

namespace {

struct Options {
  int rank = 0;
  int from = 0;
  int m = -1;
  int max_core = 2;
  int max_len = -1;
  bool as_json = false;
  bool count_only = false;
  std::vector<std::string> operands;
};

std::string generator_list(const std::vector<Generator>& gens) {
  if (gens.empty()) return "{}";
  std::string s = "{";
  for (std::size_t k = 0; k < gens.size(); ++k) s += (k ? ", " : "") + format_generator(gens[k]);
  return s + "}";
}

json generators_json(const std::vector<Generator>& gens) {
  json arr = json::array();
  for (auto g : gens) arr.push_back(format_generator(g));
  return arr;
}

json full_json(const Element& e) {
  json j = element_to_json(e);
  j["form"] = format_element(e);
  j["word"] = format_word(element_word(e));
  j["length"] = e.length();
  j["affine_length"] = e.affine_length();
  return j;
}

void print_element(std::ostream& out, const Element& e, bool as_json) {
  if (as_json) {
    out << full_json(e).dump() << "\n";
  } else {
    out << format_element(e) << "\n";
  }
}

std::string coefficient_text(const LaurentPoly& c) {
  const std::string s = c.to_string();
  return c.coefficients().size() > 1 ? "(" + s + ")" : s;
}

int cmd_appendix(const Options& o, std::ostream& out) {
  const Rank rank(o.rank);
  const auto entries = appendix_blocks(rank, o.max_core);
  const std::size_t len_cap =
      o.max_len < 0 ? std::numeric_limits<std::size_t>::max() : static_cast<std::size_t>(o.max_len);

  std::set<AffineBlock> listed;
  json rows = json::array();
  std::size_t shown = 0;
  for (const auto& e : entries) {
    if (e.block.length() > len_cap) continue;
    listed.insert(e.block);
    ++shown;
    if (o.count_only) continue;
    if (o.as_json) {
      json row = element_to_json(Element(e.block, FiniteElement(rank)));
      row["family"] = e.family;
      row["prefix"] = e.prefix;
      row["exponents"] = e.exponents;
      row["form"] = format_block(e.block);
      rows.push_back(std::move(row));
    } else {
      std::ostringstream exps;
      for (std::size_t k = 0; k < e.exponents.size(); ++k) exps << (k ? "," : "") << e.exponents[k];
      out << e.family << "  prefix=" << (e.prefix.empty() ? "1" : e.prefix) << "  exponents=("
          << exps.str() << ")  " << format_block(e.block) << "\n";
    }
  }

  // Every listed block must be a fixed point of canonicalisation, and the
  // listing must contain every block of affine length <= max_core within the cap.
  std::size_t not_fixed = 0;
  for (const auto& b : listed) {
    if (canonicalize(block_word(b)) != Element(b, FiniteElement(rank))) ++not_fixed;
  }
  std::size_t missing = 0, enumerated = 0;
  for (int m = 1; m <= o.max_core; ++m) {
    for (const auto& b : enumerate_blocks(rank, static_cast<std::size_t>(m)).items) {
      if (b.length() > len_cap) continue;
      ++enumerated;
      missing += !listed.contains(b);
    }
  }
  const bool ok = not_fixed == 0 && missing == 0;
  std::ostringstream check;
  check << "check: " << shown << " blocks listed, " << not_fixed << " not canonical, " << missing
        << " of " << enumerated << " enumerated blocks with L <= " << o.max_core << " missing";

  const std::size_t finite_count = all_finite_elements(rank).size();
  if (o.as_json) {
    json doc;
    doc["rank"] = o.rank;
    doc["right_factors"] = finite_count;
    doc["count"] = shown;
    if (!o.count_only) doc["blocks"] = std::move(rows);
    doc["check"] = {{"ok", ok}, {"not_canonical", not_fixed}, {"missing", missing}};
    out << doc.dump() << "\n";
  } else {
    if (o.count_only) out << shown << "\n";
    out << "right factors: all " << finite_count << " elements of W(A_" << o.rank << ")\n";
    out << check.str() << (ok ? " [ok]" : " [MISMATCH]") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_selfcheck(const Options& o, std::ostream& out) {
  bool ok = true;
  json arr = json::array();
  for (const auto& c : run_selfcheck()) {
    ok = ok && c.passed;
    if (o.as_json) {
      arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    } else {
      out << (c.passed ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << "\n";
    }
  }
  if (o.as_json) out << arr.dump() << "\n";
  return ok ? 0 : 1;
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& out) {
  if (cmd == "appendix") return cmd_appendix(o, out);
  if (cmd == "selfcheck") return cmd_selfcheck(o, out);
  if (cmd == "embed") {
    const Element w = parse_argument(o.operands.at(0), Rank(o.from));
    print_element(out, embed(w), o.as_json);
    return 0;
  }

  const Rank rank(o.rank);
  if (cmd == "blocks") {
    const auto fam = enumerate_blocks(rank, static_cast<std::size_t>(o.m));
    if (o.count_only) {
      out << (o.as_json ? json{{"count", fam.items.size()}}.dump() : std::to_string(fam.items.size()))
          << "\n";
      return 0;
    }
    if (o.as_json) {
      json arr = json::array();
      for (const auto& b : fam.items) arr.push_back(element_to_json(Element(b, FiniteElement(rank))));
      out << arr.dump() << "\n";
    } else {
      for (const auto& b : fam.items) out << (b.empty() ? "1" : format_block(b)) << "\n";
    }
    return 0;
  }

  const Element x = parse_argument(o.operands.at(0), rank);
  if (cmd == "canon") {
    if (o.as_json) {
      out << full_json(x).dump() << "\n";
    } else {
      out << format_element(x) << "\nl=" << x.length() << " L=" << x.affine_length() << "\n";
    }
    return 0;
  }
  if (cmd == "len") {
    if (o.as_json) {
      out << json{{"length", x.length()}, {"affine_length", x.affine_length()}}.dump() << "\n";
    } else {
      out << "l=" << x.length() << " L=" << x.affine_length() << "\n";
    }
    return 0;
  }
  if (cmd == "descents") {
    const auto left = left_descents(x), right = right_descents(x);
    if (o.as_json) {
      out << json{{"left", generators_json(left)}, {"right", generators_json(right)}}.dump() << "\n";
    } else {
      out << "left: " << generator_list(left) << "\nright: " << generator_list(right) << "\n";
    }
    return 0;
  }
  if (cmd == "inv") {
    print_element(out, inverse(x), o.as_json);
    return 0;
  }
  if (cmd == "mul") {
    print_element(out, mul(x, parse_argument(o.operands.at(1), rank)), o.as_json);
    return 0;
  }
  if (cmd == "member") {
    const bool in = is_in_image(x);
    out << (o.as_json ? json{{"member", in}}.dump() : std::string(in ? "yes" : "no")) << "\n";
    return 0;
  }
  if (cmd == "preimage") {
    const auto pre = preimage(x);
    if (!pre) throw DomainError("not in the image of the rank-" + std::to_string(o.rank - 1) +
                                " group: " + format_element(x));
    print_element(out, *pre, o.as_json);
    return 0;
  }
  if (cmd == "hecke-mul") {
    const Element y = parse_argument(o.operands.at(1), rank);
    const auto prod = hecke_mul(HeckeElement::basis(x), HeckeElement::basis(y));
    if (o.as_json) {
      json arr = json::array();
      for (const auto& [e, c] : prod.terms()) {
        json t = element_to_json(e);
        t["coeff"] = c.to_string();
        t["form"] = format_element(e);
        arr.push_back(std::move(t));
      }
      out << arr.dump() << "\n";
    } else {
      for (const auto& [e, c] : prod.terms()) {
        out << coefficient_text(c) << " * [" << format_element(e) << "]\n";
      }
    }
    return 0;
  }
  throw std::logic_error("unhandled subcommand " + cmd);
}

}  // namespace

json element_to_json(const Element& e) {
  json pairs = json::array(), bricks = json::array();
  for (const auto& p : e.block().pairs()) pairs.push_back({p.j, p.i});
  for (const auto& b : e.finite().bricks()) bricks.push_back({b.lo, b.hi});
  return {{"pairs", pairs}, {"bricks", bricks}};
}

Element element_from_json(const json& j, Rank rank) {
  auto read = [&](const char* key) {
    std::vector<std::pair<int, int>> out;
    if (!j.is_object() || !j.contains(key)) return out;
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw DomainError(std::string("'") + key + "' must be an array");
    for (const auto& item : arr) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
          !item[1].is_number_integer()) {
        throw DomainError(std::string("'") + key + "' entries must be [int, int]");
      }
      out.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return out;
  };
  if (!j.is_object()) throw DomainError("expected a JSON object with 'pairs' and 'bricks'");
  std::vector<BlockPair> pairs;
  for (auto [a, b] : read("pairs")) pairs.push_back({a, b});
  std::vector<Brick> bricks;
  for (auto [a, b] : read("bricks")) bricks.push_back({a, b});
  return Element(AffineBlock(rank, std::move(pairs)), FiniteElement::from_bricks(rank, std::move(bricks)));
}

Element parse_argument(const std::string& text, Rank rank) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw DomainError(std::string("malformed JSON: ") + e.what());
    }
    return element_from_json(j, rank);
  }
  return parse_element_or_word(text, rank);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical reduced expressions in the affine Weyl group W(~A_n)", "coxa"};
  app.require_subcommand(1);
  Options o;

  auto rank_opt = [&](CLI::App* sub) {
    sub->add_option("-n,--rank", o.rank, "Rank n (>= 2)")->required()->check(CLI::Range(2, 64));
  };
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.as_json, "JSON output"); };
  auto operands = [&](CLI::App* sub, std::size_t count, const std::string& help) {
    sub->add_option("operands", o.operands, help)->required()->expected(static_cast<int>(count));
  };

  const std::string elem_help = "Word (e.g. \"s1 a s2\"), canonical form, or JSON";
  for (const char* name : {"canon", "len", "descents", "inv", "member", "preimage"}) {
    auto* sub = app.add_subcommand(name);
    rank_opt(sub);
    json_flag(sub);
    operands(sub, 1, elem_help);
  }
  app.get_subcommand("canon")->description("Canonical form, length and affine length");
  app.get_subcommand("len")->description("Length l and affine length L");
  app.get_subcommand("descents")->description("Left and right descent sets");
  app.get_subcommand("inv")->description("Inverse");
  app.get_subcommand("member")->description("Whether the element lies in the image of the rank n-1 group");
  app.get_subcommand("preimage")->description("Preimage under the tower embedding");
  for (const char* name : {"mul", "hecke-mul"}) {
    auto* sub = app.add_subcommand(name);
    rank_opt(sub);
    json_flag(sub);
    operands(sub, 2, elem_help);
  }
  app.get_subcommand("mul")->description("Group product");
  app.get_subcommand("hecke-mul")->description("Product of two Hecke basis elements");

  auto* blocks = app.add_subcommand("blocks", "Affine blocks of affine length m");
  rank_opt(blocks);
  json_flag(blocks);
  blocks->add_option("-m", o.m, "Affine length")->required()->check(CLI::NonNegativeNumber);
  blocks->add_flag("--count-only", o.count_only, "Print the count only");

  auto* emb = app.add_subcommand("embed", "Tower embedding into the next rank");
  emb->add_option("--from", o.from, "Source rank")->required()->check(CLI::Range(2, 63));
  json_flag(emb);
  operands(emb, 1, elem_help);

  auto* appx = app.add_subcommand("appendix", "Parametric block listings for n = 2, 3");
  appx->add_option("-n,--rank", o.rank, "Rank (2 or 3)")->required()->check(CLI::IsMember({2, 3}));
  appx->add_option("--max-core", o.max_core, "Largest core exponent")->check(CLI::Range(0, 12));
  appx->add_option("--max-len", o.max_len, "Largest block length")->check(CLI::NonNegativeNumber);
  appx->add_flag("--count-only", o.count_only, "Print the count only");
  json_flag(appx);

  auto* self = app.add_subcommand("selfcheck", "Validate the library against the permutation oracle");
  json_flag(self);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    if (const auto subs = app.get_subcommands(); !subs.empty()) {
      err << subs.front()->help();
    }
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace coxa::cli
