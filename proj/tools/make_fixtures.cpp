// Regenerates the bundled datasets under data/:
//   fortune/kg.jsonl, fortune/yago.nt   Fortune-500-shaped scored graph and reference facts
//   kinship/train.tsv, kinship/test.tsv  family-relations toy set, 80/20 split
//
// usage: make_fixtures <data-dir>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "ontogen/rdf_io.hpp"

namespace fs = std::filesystem;
using namespace ontogen;

namespace {

const std::string kEx = "http://example.org/fortune/";

struct Known {
  const char* name;
  const char* sector;
};

// The 70 companies whose business focus appears in the source documents.
const Known kAssigned[] = {
    {"Walmart", "Retail"}, {"Amazon", "Retail"}, {"Exxon_Mobil", "Energy"}, {"Apple", "Technology"},
    {"CVS_Health", "Health_Care"}, {"Facebook", "Technology"}, {"UnitedHealth_Group", "Health_Care"},
    {"McKesson", "Health_Care"}, {"AT_and_T", "Telecommunications"}, {"AmerisourceBergen", "Health_Care"},
    {"Alphabet", "Technology"}, {"Ford_Motor", "Motor_Vehicles"}, {"Cigna", "Health_Care"},
    {"Costco", "Retail"}, {"Chevron", "Energy"}, {"Cardinal_Health", "Health_Care"},
    {"JPMorgan_Chase", "Financials"}, {"General_Motors", "Motor_Vehicles"}, {"Walgreens", "Retail"},
    {"Verizon", "Telecommunications"}, {"Microsoft", "Technology"}, {"Marathon_Petroleum", "Energy"},
    {"Kroger", "Food"}, {"Fannie_Mae", "Financials"}, {"Bank_of_America", "Financials"},
    {"Home_Depot", "Retail"}, {"Phillips_66", "Energy"}, {"Comcast", "Telecommunications"},
    {"Anthem", "Health_Care"}, {"Wells_Fargo", "Financials"}, {"Citigroup", "Financials"},
    {"Valero_Energy", "Energy"}, {"General_Electric", "Industrials"}, {"Dell_Technologies", "Technology"},
    {"Johnson_and_Johnson", "Health_Care"}, {"State_Farm", "Financials"}, {"Target", "Retail"},
    {"IBM", "Technology"}, {"Raytheon", "Industrials"}, {"Boeing", "Industrials"},
    {"Freddie_Mac", "Financials"}, {"Centene", "Health_Care"}, {"UPS", "Industrials"},
    {"Lowes", "Retail"}, {"Intel", "Technology"}, {"MetLife", "Financials"}, {"Procter_and_Gamble", "Food"},
    {"PepsiCo", "Food"}, {"FedEx", "Industrials"}, {"Humana", "Health_Care"}, {"Lockheed_Martin", "Industrials"},
    {"Archer_Daniels_Midland", "Food"}, {"Albertsons", "Food"}, {"Disney", "Telecommunications"},
    {"Sysco", "Food"}, {"HP", "Technology"}, {"Caterpillar", "Industrials"}, {"Energy_Transfer", "Energy"},
    {"Goldman_Sachs", "Financials"}, {"Morgan_Stanley", "Financials"}, {"Pfizer", "Health_Care"},
    {"Cisco_Systems", "Technology"}, {"Merck", "Health_Care"}, {"Tyson_Foods", "Food"},
    {"Best_Buy", "Retail"}, {"Delta_Air_Lines", "Airlines"}, {"American_Airlines", "Airlines"},
    {"United_Airlines", "Airlines"}, {"Oracle", "Technology"}, {"Coca_Cola", "Food"},
};

// Errors the generator made: object it wrote instead of the true sector.
std::string planted_sector(const std::string& company) {
  if (company == "Facebook") return "Motor_Vehicles";
  if (company == "Delta_Air_Lines") return "Retail";
  return {};
}

Term ex(const std::string& local) { return iri(kEx + local); }
Term integer(long long v) { return typed_literal(std::to_string(v), std::string(vocab::kXsdInteger)); }
Term decimal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return typed_literal(buf, std::string(vocab::kXsdDecimal));
}

void make_fortune(const fs::path& dir) {
  std::mt19937_64 rng(500);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto between = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  std::vector<ScoredTriple> kg;
  std::vector<Triple> yago;
  auto add = [&](Term s, Term p, Term o, double conf) { kg.push_back(ScoredTriple{{s, p, o}, conf, std::nullopt, false}); };
  const Term type = iri(std::string(vocab::kType));

  std::vector<std::string> sectors = {"Technology", "Retail", "Energy", "Financials", "Health_Care",
                                      "Motor_Vehicles", "Airlines", "Telecommunications", "Food", "Industrials"};
  for (const auto& s : sectors) add(ex("sector/" + s), type, ex("Sector"), 0.97);

  std::vector<std::string> companies;
  for (const auto& k : kAssigned) companies.push_back(k.name);
  for (int i = static_cast<int>(companies.size()) + 1; companies.size() < 500; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "Enterprise_%03d", i);
    companies.push_back(buf);
  }

  for (std::size_t i = 0; i < companies.size(); ++i) {
    const auto& name = companies[i];
    Term c = ex("company/" + name);
    add(c, type, ex("Company"), 0.97);

    auto conf = [&] { return unit(rng) < 0.05 ? between(0.3, 0.5) : between(0.75, 1.0); };
    long long rank = static_cast<long long>(i) + 1;
    double revenues = 520000.0 / std::pow(static_cast<double>(rank), 0.8);
    std::string label = name;
    std::replace(label.begin(), label.end(), '_', ' ');

    add(c, ex("rank"), integer(rank), conf());
    add(c, ex("companyName"), literal(label), conf());
    add(c, ex("employees"), integer(1000 + static_cast<long long>(between(0, 2000000) / rank)), conf());
    add(c, ex("previousRank"), integer(std::max(1LL, rank + static_cast<long long>(between(-12, 12)))), conf());
    add(c, ex("revenues"), decimal(revenues), conf());
    add(c, ex("revenueChange"), decimal(between(-15.0, 25.0)), conf());
    add(c, ex("profits"), decimal(revenues * between(-0.05, 0.2)), conf());
    add(c, ex("profitChange"), decimal(between(-60.0, 80.0)), conf());
    add(c, ex("assets"), decimal(revenues * between(0.5, 4.0)), conf());
    add(c, ex("marketValue"), decimal(revenues * between(0.2, 6.0)), conf());

    if (i < std::size(kAssigned)) {
      std::string truth = kAssigned[i].sector;
      std::string written = planted_sector(name);
      if (written.empty()) {
        add(c, ex("business"), ex("sector/" + truth), between(0.85, 0.95));
      } else {
        add(c, ex("business"), ex("sector/" + written), 0.9);
      }
      yago.push_back({c, ex("business"), ex("sector/" + truth)});
    }
  }

  // Boilerplate picked up by the generator.
  const char* noise[] = {"Subscribe to our newsletter", "Share on Facebook", "Accept cookies", "Advertisement",
                         "Sign in"};
  for (int k = 0; k < 25; ++k) {
    Term c = ex("company/" + companies[static_cast<std::size_t>(k * 19) % companies.size()]);
    add(c, ex("mentions"), literal(noise[k % 5]), between(0.05, 0.25));
  }

  // A scattered island unrelated to the companies.
  add(ex("Bucket"), ex("kickedBy"), ex("Idiom"), 0.66);
  add(ex("Idiom"), ex("mentionedIn"), ex("PoliticalArticle"), 0.62);
  add(ex("PoliticalArticle"), ex("headline"), literal("Senator kicks the bucket on tax reform"), 0.64);

  write_file(dir / "kg.jsonl", serialize_scored_jsonl(kg));
  write_file(dir / "yago.nt", serialize_ntriples(yago));
  std::cout << "fortune: " << kg.size() << " scored triples, " << yago.size() << " reference facts\n";
}

void make_kinship(const fs::path& dir) {
  const std::string ns = "http://example.org/kin/";
  std::vector<Triple> all;
  auto rel = [&](const std::string& a, const std::string& r, const std::string& b) {
    all.push_back(make_triple(ns + a, ns + r, ns + b));
  };
  auto couple = [&](const std::string& a, const std::string& b) {
    rel(a, "marriedTo", b);
    rel(b, "marriedTo", a);
  };
  auto parents_of = [&](const std::string& p1, const std::string& p2, const std::vector<std::string>& kids) {
    for (const auto& k : kids) {
      for (const auto& p : {p1, p2}) {
        rel(p, "parentOf", k);
        rel(k, "childOf", p);
      }
    }
    for (const auto& a : kids) {
      for (const auto& b : kids) {
        if (a != b) rel(a, "siblingOf", b);
      }
    }
  };

  const char* families[] = {"Ash", "Birch", "Cedar", "Elm", "Fir"};
  for (const std::string f : families) {
    auto p = [&](const std::string& role) { return f + "_" + role; };
    couple(p("grandfather"), p("grandmother"));
    parents_of(p("grandfather"), p("grandmother"), {p("son"), p("daughter"), p("youngest")});
    couple(p("son"), p("son_wife"));
    couple(p("daughter"), p("daughter_husband"));
    parents_of(p("son"), p("son_wife"), {p("grandson1"), p("granddaughter1")});
    parents_of(p("daughter_husband"), p("daughter"), {p("grandson2"), p("granddaughter2")});
  }

  std::sort(all.begin(), all.end());
  std::mt19937_64 rng(42);
  std::shuffle(all.begin(), all.end(), rng);
  const std::size_t n_train = all.size() * 8 / 10;

  auto tsv = [&](std::size_t begin, std::size_t end) {
    std::vector<Triple> part(all.begin() + static_cast<std::ptrdiff_t>(begin),
                             all.begin() + static_cast<std::ptrdiff_t>(end));
    std::sort(part.begin(), part.end());
    std::string out;
    for (const auto& t : part) out += t.subject.value + "\t" + t.predicate.value + "\t" + t.object.value + "\n";
    return out;
  };
  write_file(dir / "train.tsv", tsv(0, n_train));
  write_file(dir / "test.tsv", tsv(n_train, all.size()));
  std::cout << "kinship: " << n_train << " train, " << all.size() - n_train << " test\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <data-dir>\n";
    return 1;
  }
  fs::path data = argv[1];
  make_fortune(data / "fortune");
  make_kinship(data / "kinship");
  return 0;
}
