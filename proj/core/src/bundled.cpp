#include "boolnet/bundled.hpp"

namespace boolnet {

namespace {

// NSCLC drug-resistance model; DNA_Damage is the input node.
constexpr std::string_view kNet31 = R"(targets, factors
ATM, DNA_Damage & (!HDAC1 | !Wip1 | E2F1 | !BMI1)
p38MAPK, ATM & !Wip1
miR_145, p53 & !MALAT1 & !BMI1
Sp1, (BMI1 & Myc) | !miR_145
MALAT1, Sp1
BMI1, Myc | E2F1
KLF4, !miR_145 | (E2F1 & !HDAC1 & p53)
HDAC1, !Sirt_1 & !DNA_Damage
Myc, (E2F1 | p38MAPK | !p21) & !RB & !miR_145
p53, (ATM & !KLF4) | (!Mdm2 & p38MAPK & !HDAC1 & !MALAT1)
Mdm2, (!Wip1 | p53) & !ATM & !miR_145
p53_A, !Sirt_1 & !p53_K & (p53 | !p53_INP1)
p53_K, !p53_A & (!Sirt_1 | !Wip1) & p53
Sirt_1, E2F1 & !miR_145 & !HDAC1
p53_INP1, p53_A | p53_K
Wip1, p53_A & !miR_145
p21, p53_A | ((!HDAC1 & !Myc) & !BMI1 & !Caspase3 & p38MAPK)
Cdc25A, !ATM & !p38MAPK
CDK46_CycD, Cdc25A & !miR_145 & !p21
CDK2_CycE, Cdc25A & E2F1 & !p21
RB, !CDK46_CycD & !CDK2_CycE
PUMA, p53_K
BCL2, !PUMA & !miR_145
BAX, (!BCL2 | !KLF4) & !p53_K
E2F1, (!RB & ((Cdc25A & ATM) | !Sirt_1)) | MALAT1 | Myc
Caspase3, (!BCL2 | !p21) & BAX
DNA_Damage, DNA_Damage
Proliferation, CDK2_CycE & !p53
Drug_Resistance, MALAT1 & RB
Senescence, p21 & !CDK2_CycE
Apoptosis, Caspase3
)";

// Sirt_1 and p53_INP1 removed.
constexpr std::string_view kNet29 = R"(targets, factors
ATM, DNA_Damage & (!HDAC1 | !Wip1 | E2F1 | !BMI1)
p38MAPK, ATM & !Wip1
miR_145, p53 & !MALAT1 & !BMI1
Sp1, (BMI1 & Myc) | !miR_145
MALAT1, Sp1
BMI1, Myc | E2F1
KLF4, !miR_145 | (E2F1 & !HDAC1 & p53)
HDAC1, !DNA_Damage
Myc, (E2F1 | p38MAPK | !p21) & !RB & !miR_145
p53, (ATM & !KLF4) | (!Mdm2 & p38MAPK & !HDAC1 & !MALAT1)
Mdm2, (!Wip1 | p53) & !ATM & !miR_145
p53_A, !p53_K &  (p53)
p53_K, !p53_A & (!Wip1) & p53
Wip1, p53_A  & !miR_145
p21, p53_A | ((!HDAC1 & !Myc) & !BMI1 & !Caspase3 & p38MAPK)
Cdc25A, !ATM & !p38MAPK
CDK46_CycD, Cdc25A & !miR_145 & !p21
CDK2_CycE, Cdc25A & E2F1 & !p21
RB, !CDK46_CycD & !CDK2_CycE
PUMA, p53_K
BCL2, !PUMA & !miR_145
BAX, (!BCL2 | !KLF4) & !p53_K
E2F1, (!RB & ((Cdc25A & ATM))) | MALAT1 | Myc
Caspase3, (!BCL2 | !p21) & BAX
DNA_Damage, DNA_Damage
Proliferation, CDK2_CycE & !p53
Drug_Resistance, MALAT1 & RB
Senescence, p21 & !CDK2_CycE
Apoptosis, Caspase3
)";

// Reduction of net29 under DNA_Damage = 1 with terminal nodes removed.
constexpr std::string_view kNet14 = R"(targets, factors
miR_145, p53 & !MALAT1 & !BMI1
Sp1, (BMI1) | !miR_145
MALAT1, Sp1
BMI1, E2F1
KLF4, !miR_145 | (E2F1 & p53)
p53, !KLF4 | !MALAT1
p53_A, !p53_K & p53
p53_K, !p53_A & p53
BAX, (!BCL2 | !KLF4) & !p53_K
E2F1, MALAT1
Caspase3, (!BCL2 | !p21) & BAX
p21, p53_A | (!BMI1 & !Caspase3)
BCL2, !PUMA & !miR_145
PUMA, p53_K
)";

constexpr std::string_view kNet09 = R"(targets, factors
miR_145, p53 & !MALAT1 & !BMI1
Sp1, (BMI1) | !miR_145
MALAT1, Sp1
BMI1, E2F1
KLF4, !miR_145 | (E2F1 & p53)
p53, !KLF4 | !MALAT1
p53_A, !p53_K & p53
p53_K, !p53_A & p53
E2F1, MALAT1
)";

// net09 with the fitted BMI1 rule.
constexpr std::string_view kNet09Fitted = R"(targets, factors
miR_145, p53 & !MALAT1 & !BMI1
Sp1, (BMI1) | !miR_145
MALAT1, Sp1
BMI1, (!p53_A & !p53_K) | E2F1
KLF4, !miR_145 | (E2F1 & p53)
p53, !KLF4 | !MALAT1
p53_A, !p53_K & p53
p53_K, !p53_A & p53
E2F1, MALAT1
)";

}  // namespace

const std::vector<BundledNetwork>& bundled_networks() {
  static const std::vector<BundledNetwork> nets = {
      {"net31", "31-node NSCLC drug-resistance network", kNet31,
       {"Proliferation", "Drug_Resistance", "Senescence", "Apoptosis"}},
      {"net29", "29-node reduction (Sirt_1, p53_INP1 removed)", kNet29,
       {"Proliferation", "Drug_Resistance", "Senescence", "Apoptosis"}},
      {"net14", "14-node reduction for DNA_Damage = 1", kNet14, {}},
      {"net09", "9-node minimal core", kNet09, {}},
      {"net09_fitted", "9-node core with fitted BMI1 rule", kNet09Fitted, {}},
  };
  return nets;
}

bool is_bundled(std::string_view name) {
  for (const auto& b : bundled_networks()) {
    if (b.name == name) return true;
  }
  return false;
}

Network load_bundled(std::string_view name) {
  for (const auto& b : bundled_networks()) {
    if (b.name != name) continue;
    NetworkConfig config;
    config.name = std::string(b.name);
    for (auto out : b.outputs) config.outputs.emplace_back(out);
    return load_network(b.rules, config);
  }
  throw NetworkError("no bundled network named '" + std::string(name) + "'");
}

}  // namespace boolnet
