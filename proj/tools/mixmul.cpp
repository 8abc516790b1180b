#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "mixmul/cli.hpp"
#include "mixmul/errors.hpp"

namespace {

constexpr int kInputError = 3;

template <typename T>
std::optional<T> given(const CLI::Option* opt, const T& value) {
  return opt->count() ? std::optional<T>(value) : std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed multiplicities, (FC)- and superficial sequences on graded instances."};
  app.set_help_flag("-h,--help", "Print this help and exit");

  std::string command;
  std::string path;
  std::vector<std::size_t> k;
  std::vector<std::size_t> eps;
  std::string element;
  std::size_t index = 1;
  std::size_t window_base = 4;
  std::size_t window_width = 3;
  std::size_t tries = 50;
  std::uint64_t seed = 0;
  std::string field = "QQ";
  std::string out_path;
  mixmul::cli::RunFlags flags;

  app.add_option("command", command, "mixed | samuel | check-fc | check-superficial | check-thm3 | check-thm5 | "
                                     "check-remark7 | check-remark2")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(mixmul::cli::kCommands),
                                                     std::end(mixmul::cli::kCommands))));
  app.add_option("instance", path, "Instance file")->required();
  auto* k_opt = app.add_option("--k", k, "k-vector k0,k1,...,ks")->delimiter(',');
  auto* eps_opt = app.add_option("--eps", eps, "Indices into I1..Is (check-remark7) or the tuple position (check-superficial)")
                      ->delimiter(',');
  auto* element_opt = app.add_option("--element", element, "Element to check instead of sampling one");
  auto* index_opt = app.add_option("--index", index, "1-based position of the element's ideal in the tuple");
  app.add_flag("--with-j", flags.with_j, "Use the tuple (J, I1, ..., Is) instead of (I1, ..., Is)");
  auto* base_opt = app.add_option("--window-base", window_base, "Smallest exponent of the test window")->capture_default_str();
  auto* width_opt = app.add_option("--window-width", window_width, "Width of the test window")->capture_default_str();
  auto* tries_opt = app.add_option("--tries", tries, "Candidates per sequence step")->capture_default_str();
  auto* seed_opt = app.add_option("--seed", seed, "Sampling seed")->capture_default_str();
  auto* field_opt = app.add_option("--field", field, "QQ or Fp(p); replaces the field of the ring line")->capture_default_str();
  app.add_option("--out", out_path, "Write the machine-readable report (JSON) here");
  app.add_option("--jobs", flags.jobs, "Worker threads for grids and window checks")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  flags.k = given(k_opt, k);
  flags.eps = given(eps_opt, eps);
  flags.element = given(element_opt, element);
  flags.index = given(index_opt, index);
  flags.window_base = given(base_opt, window_base);
  flags.window_width = given(width_opt, window_width);
  flags.tries = given(tries_opt, tries);
  flags.seed = given(seed_opt, seed);

  try {
    std::optional<mixmul::Field> field_override;
    if (field_opt->count()) field_override = mixmul::cli::parse_field(field);
    const auto spec = mixmul::cli::parse_instance(path, field_override);
    const auto result = mixmul::cli::run(command, spec, flags, std::cout);
    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return kInputError;
      }
      out << result.report.dump(2) << '\n';
    }
    return result.exit_code;
  } catch (const mixmul::Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return 2;
  } catch (const mixmul::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
