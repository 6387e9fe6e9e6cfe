#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lch/augmentation.hpp"
#include "lch/parse.hpp"
#include "lch/serialize.hpp"
#include "lch/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void printWarnings(const std::vector<lch::DimensionWarning>& warnings) {
  for (const auto& warning : warnings)
    std::cout << "warning: line " << warning.line << ": record for " << warning.positive
              << " has formal dimension " << warning.dimension << " (expected 0)\n";
}

struct LoadedDga {
  lch::Dga dga;
  std::string ref;
};

LoadedDga loadDga(const std::string& path) {
  const auto parsed = lch::parseDga(readFile(path));
  printWarnings(parsed.warnings);
  return {parsed.document.toDga(), path};
}

// Resolves a reference found in a cobordism file relative to that file.
std::string resolveRef(const std::string& cobPath, const std::string& ref) {
  std::filesystem::path p(ref);
  if (p.is_absolute()) return ref;
  return (std::filesystem::path(cobPath).parent_path() / p).string();
}

struct LoadedCobordism {
  lch::ParsedCobordism parsed;
  std::string sourcePath;
  std::string targetPath;
};

LoadedCobordism loadCobordism(const std::string& path, std::string sourceOverride,
                              std::string targetOverride) {
  const std::string text = readFile(path);
  const auto header = lch::parseCobordismHeader(text);
  std::string sourcePath = sourceOverride;
  std::string targetPath = targetOverride;
  if (sourcePath.empty()) {
    if (!header.sourceRef)
      throw std::runtime_error("'" + path + "' has no source directive; pass --source");
    sourcePath = resolveRef(path, *header.sourceRef);
  }
  if (targetPath.empty()) {
    if (!header.targetRef)
      throw std::runtime_error("'" + path + "' has no target directive; pass --target");
    targetPath = resolveRef(path, *header.targetRef);
  }
  auto source = loadDga(sourcePath);
  auto target = loadDga(targetPath);
  auto parsed = lch::parseCobordism(text, source.dga, target.dga);
  printWarnings(parsed.warnings);
  return {std::move(parsed), std::move(sourcePath), std::move(targetPath)};
}

int cmdCheck(const std::string& path) {
  const auto loaded = loadDga(path);
  bool clean = true;
  for (const auto& violation : lch::gradingValidate(loaded.dga)) {
    clean = false;
    std::cout << "grading violation: d(" << violation.chord << ") contains "
              << violation.word.toString() << " of grading " << violation.found
              << ", expected " << violation.expected << "\n";
  }
  for (const auto& [chord, square] : lch::dSquaredReport(loaded.dga)) {
    clean = false;
    std::cout << "d^2(" << chord << ") = " << square.toString() << "\n";
  }
  if (clean) {
    std::cout << "ok: " << loaded.dga.chords().size() << " chords, d^2 = 0, gradings consistent\n";
    return kExitOk;
  }
  return kExitCheckFailed;
}

int cmdMorphismCheck(const std::string& path, const std::string& sourceOverride,
                     const std::string& targetOverride) {
  const auto loaded = loadCobordism(path, sourceOverride, targetOverride);
  bool clean = true;
  for (const auto& violation : lch::gradingValidate(loaded.parsed.morphism)) {
    clean = false;
    std::cout << "degree violation: image of " << violation.chord << " contains "
              << violation.word.toString() << " of grading " << violation.found
              << ", expected " << violation.expected << "\n";
  }
  const auto report = lch::checkChainMap(loaded.parsed.morphism);
  if (!report.ok) {
    clean = false;
    for (const auto& chord : report.offending)
      std::cout << "chain-map failure at " << chord << "\n";
  }
  if (clean) {
    std::cout << "ok: chain map verified on " << loaded.parsed.morphism.source().chords().size()
              << " generators\n";
    return kExitOk;
  }
  return kExitCheckFailed;
}

int cmdCompose(const std::string& firstPath, const std::string& secondPath) {
  const auto first = loadCobordism(firstPath, "", "");
  const auto second = loadCobordism(secondPath, "", "");
  if (!(first.parsed.morphism.target() == second.parsed.morphism.source())) {
    std::cerr << "error: middle DGAs do not match: '" << first.targetPath << "' vs '"
              << second.sourcePath << "'\n";
    return kExitUsage;
  }
  const auto composed = lch::compose(second.parsed.morphism, first.parsed.morphism);
  std::cout << lch::serializeMorphism(composed, first.sourcePath, second.targetPath);
  return kExitOk;
}

int cmdVerifySigns(const lch::SweepConfig& config, const std::string& format) {
  const auto reports = lch::runAllSweeps(config);
  if (format == "summary") {
    std::cout << lch::renderSummary(reports);
  } else {
    std::cout << lch::renderText(reports);
  }
  if (!lch::allPassed(reports)) {
    for (const auto& report : reports)
      if (const auto* failure = report.firstFailure()) {
        std::cout << "first counterexample (" << report.lemma << "): " << failure->params
                  << "\n"
                  << failure->detail;
        break;
      }
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmdLinearize(const std::string& dgaPath, const std::string& augPath) {
  const auto loaded = loadDga(dgaPath);
  const auto aug = lch::parseAugmentation(readFile(augPath), loaded.dga);
  const auto report = lch::augmentationCheck(loaded.dga, aug);
  if (!report.ok) {
    for (const auto& [chord, value] : report.nonzero)
      std::cout << "augmentation failure: aug(d(" << chord << ")) = " << value.str() << "\n";
    return kExitCheckFailed;
  }
  const auto complex = lch::linearizedDifferential(loaded.dga, aug);
  for (const auto& [grading, names] : complex.basis()) {
    std::cout << "grading " << grading << ": chords";
    for (const auto& name : names) std::cout << " " << name;
    std::cout << "\n";
    const lch::MatQ matrix = complex.matrixFor(grading);
    std::cout << "d_lin[" << grading << " -> " << grading - 1 << "] (" << matrix.rows() << "x"
              << matrix.cols() << ")";
    if (matrix.rows() > 0 && matrix.cols() > 0) std::cout << ":\n" << matrix.toString();
    std::cout << "\n";
  }
  std::cout << "d_lin^2 = " << (complex.squaresToZero() ? "0" : "NONZERO") << "\n";
  for (const auto& [grading, rank] : complex.homologyRanks())
    std::cout << "homology rank at grading " << grading << ": " << rank << "\n";
  return kExitOk;
}

std::vector<int> parseNs(const std::string& csv) {
  std::vector<int> ns;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    ns.push_back(std::stoi(item));
  }
  if (ns.empty()) throw std::runtime_error("--n list is empty");
  return ns;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Integer-coefficient Legendrian contact homology toolkit: DGA validation,\n"
      "cobordism map composition, orientation-sign verification, linearization."};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string dgaPath, augPath, cobPath, cobPath2, sourceOverride, targetOverride;
  std::string format = "text";
  lch::SweepConfig config;

  auto* check = app.add_subcommand("check", "Validate gradings and d^2 = 0 for a DGA file");
  check->add_option("dga", dgaPath, "DGA presentation file")->required();

  auto* morphism = app.add_subcommand(
      "morphism-check", "Verify a cobordism disk table induces a degree-0 chain map");
  morphism->add_option("cobordism", cobPath, "cobordism disk-count file")->required();
  morphism->add_option("--source", sourceOverride, "source DGA file (overrides the directive)");
  morphism->add_option("--target", targetOverride, "target DGA file (overrides the directive)");

  auto* composeCmd =
      app.add_subcommand("compose", "Compose two cobordism tables and print the result");
  composeCmd->add_option("first", cobPath, "first cobordism (applied first)")->required();
  composeCmd->add_option("second", cobPath2, "second cobordism (applied last)")->required();

  auto* verify = app.add_subcommand("verify-signs",
                                    "Sweep the orientation-sign lemmas against their ledgers");
  std::string nsCsv = "1,2,3";
  verify->add_option("--max-m", config.maxM, "largest negative-puncture count")
      ->envname("LCH_MAX_M")->capture_default_str();
  verify->add_option("--max-r", config.maxR, "largest outer-disk puncture count")
      ->envname("LCH_MAX_R")->capture_default_str();
  verify->add_option("--max-l", config.maxL, "largest cobordism word length")
      ->envname("LCH_MAX_L")->capture_default_str();
  verify->add_option("--grading-min", config.gradingMin, "smallest chord grading")
      ->envname("LCH_GRADING_MIN")->capture_default_str();
  verify->add_option("--grading-max", config.gradingMax, "largest chord grading")
      ->envname("LCH_GRADING_MAX")->capture_default_str();
  verify->add_option("--n", nsCsv, "comma-separated ambient dimensions")
      ->envname("LCH_N")->capture_default_str();
  verify->add_option("--seed", config.seed, "sweep seed")
      ->envname("LCH_SEED")->capture_default_str();
  verify->add_option("--scenarios", config.scenarioTarget,
                     "scenario count per randomized lemma")
      ->envname("LCH_SCENARIOS")->capture_default_str();
  verify->add_option("--conformal-max", config.conformalMax,
                     "bound for the conformal-gluing sweep")
      ->envname("LCH_CONFORMAL_MAX")->capture_default_str();
  verify->add_option("--format", format, "report format: text | summary")
      ->envname("LCH_FORMAT")->check(CLI::IsMember({"text", "summary"}))
      ->capture_default_str();

  auto* linearize = app.add_subcommand(
      "linearize", "Linearized differential and homology ranks for an augmentation");
  linearize->add_option("dga", dgaPath, "DGA presentation file")->required();
  linearize->add_option("augmentation", augPath, "augmentation file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmdCheck(dgaPath);
    if (morphism->parsed()) return cmdMorphismCheck(cobPath, sourceOverride, targetOverride);
    if (composeCmd->parsed()) return cmdCompose(cobPath, cobPath2);
    if (verify->parsed()) {
      config.ns = parseNs(nsCsv);
      return cmdVerifySigns(config, format);
    }
    if (linearize->parsed()) return cmdLinearize(dgaPath, augPath);
  } catch (const lch::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
