// tropmat: tropical oriented matroids and mixed subdivisions from the
// command line. See README.md for the file formats.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tropmat/duality.hpp"
#include "tropmat/error.hpp"
#include "tropmat/json_io.hpp"
#include "tropmat/mixsd.hpp"
#include "tropmat/realize.hpp"
#include "tropmat/render.hpp"
#include "tropmat/tom.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kMathFailure = 3;
constexpr int kLimitExceeded = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw tropmat::TropmatError(tropmat::Errc::parse_error,
                                "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw tropmat::TropmatError(tropmat::Errc::parse_error,
                                "cannot write '" + path + "'");
  }
  out << content;
}

enum class FileKind { collection, subdivision };

FileKind detect_kind(const std::string& text) {
  nlohmann::json doc =
      nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw tropmat::TropmatError(tropmat::Errc::parse_error, "malformed JSON");
  }
  if (doc.contains("maximal_cells")) return FileKind::subdivision;
  if (doc.contains("types")) return FileKind::collection;
  throw tropmat::TropmatError(tropmat::Errc::schema_error,
                              "expected 'types' or 'maximal_cells'");
}

int map_error(const tropmat::TropmatError& e) {
  switch (e.code()) {
    case tropmat::Errc::limit_exceeded:
      return kLimitExceeded;
    case tropmat::Errc::not_a_tom:
    case tropmat::Errc::invalid_subdivision:
      return kMathFailure;
    default:
      return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropical oriented matroids and mixed subdivisions"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  int coord = 0;
  int letter = 0;
  int slice_index = 0;
  int topes_n = 0;
  int topes_d = 0;
  bool volume_check = false;
  bool labels = false;
  std::string mode;

  CLI::App* gen = app.add_subcommand(
      "gen", "enumerate the types realized by a weight matrix");
  gen->add_option("-i,--input", input, "weights JSON")->required();
  gen->add_option("-o,--output", output, "collection JSON (stdout default)");

  CLI::App* check_tom_cmd =
      app.add_subcommand("check-tom", "verify the four axioms");
  check_tom_cmd->add_option("-i,--input", input, "collection JSON")
      ->required();
  check_tom_cmd->add_option("-o,--output", output, "report JSON");

  CLI::App* check_mixsd_cmd = app.add_subcommand(
      "check-mixsd", "certify a cell set as a mixed subdivision");
  check_mixsd_cmd->add_option("-i,--input", input, "subdivision JSON")
      ->required();
  check_mixsd_cmd->add_flag("--volume-check", volume_check,
                            "also compare normalized volumes against n^(d-1)");
  check_mixsd_cmd->add_option("-o,--output", output, "report JSON");

  CLI::App* reconstruct_cmd = app.add_subcommand(
      "reconstruct", "rebuild a subdivision from its 0-cells");
  reconstruct_cmd->add_option("-i,--input", input, "topes JSON")->required();
  reconstruct_cmd->add_option("-n", topes_n, "coordinate count")->required();
  reconstruct_cmd->add_option("-d", topes_d, "alphabet size")->required();
  reconstruct_cmd->add_option("-o,--output", output, "subdivision JSON");

  CLI::App* delete_cmd = app.add_subcommand(
      "delete", "delete a coordinate from a collection or subdivision");
  delete_cmd->add_option("-i,--input", input, "input JSON")->required();
  delete_cmd->add_option("--coord", coord, "coordinate, 1-based")->required();
  delete_cmd->add_option("-o,--output", output, "output JSON");

  CLI::App* contract_cmd = app.add_subcommand(
      "contract", "contract a letter of a collection or subdivision");
  contract_cmd->add_option("-i,--input", input, "input JSON")->required();
  contract_cmd->add_option("--letter", letter, "letter, 1-based")->required();
  contract_cmd->add_option("-o,--output", output, "output JSON");

  CLI::App* dualize_cmd = app.add_subcommand(
      "dualize", "Poincaré dual of a subdivision, or one pseudohyperplane");
  dualize_cmd->add_option("-i,--input", input, "subdivision JSON")
      ->required();
  CLI::Option* slice_opt = dualize_cmd->add_option(
      "--slice", slice_index, "extract pseudohyperplane i, 1-based");
  dualize_cmd->add_option("-o,--output", output, "output JSON");

  CLI::App* render_cmd =
      app.add_subcommand("render", "SVG picture of a d = 3 instance");
  render_cmd->add_option("-i,--input", input, "subdivision or weights JSON")
      ->required();
  render_cmd
      ->add_option("--mode", mode, "subdivision | arrangement")
      ->required()
      ->check(CLI::IsMember({"subdivision", "arrangement"}));
  render_cmd->add_flag("--labels", labels, "annotate types");
  render_cmd->add_option("-o,--output", output, "SVG file (stdout default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (gen->parsed()) {
      tropmat::WeightMatrix w =
          tropmat::weight_matrix_from_json(read_file(input));
      write_output(output, tropmat::to_json(tropmat::realizable_tom(w)));
      return kOk;
    }

    if (check_tom_cmd->parsed()) {
      tropmat::TypeCollection m =
          tropmat::collection_from_json(read_file(input));
      tropmat::AxiomReport report = tropmat::check_tom(m);
      write_output(output, tropmat::to_json(report));
      return report.pass() ? kOk : kMathFailure;
    }

    if (check_mixsd_cmd->parsed()) {
      tropmat::MixedSubdivision s =
          tropmat::subdivision_from_json(read_file(input));
      tropmat::ValidationReport report =
          tropmat::validate_mixsd(s, volume_check);
      write_output(output, tropmat::to_json(report));
      return report.pass() ? kOk : kMathFailure;
    }

    if (reconstruct_cmd->parsed()) {
      nlohmann::json doc = nlohmann::json::parse(read_file(input), nullptr,
                                                 /*allow_exceptions=*/false);
      if (doc.is_discarded()) {
        throw tropmat::TropmatError(tropmat::Errc::parse_error,
                                    "malformed JSON");
      }
      std::vector<tropmat::NdType> topes;
      if (doc.is_array()) {
        for (const auto& item : doc) {
          topes.push_back(
              tropmat::NdType::parse(item.get<std::string>(), topes_d));
        }
      } else {
        tropmat::TypeCollection m =
            tropmat::collection_from_json(doc.dump());
        if (m.n() != topes_n || m.d() != topes_d) {
          throw tropmat::TropmatError(tropmat::Errc::parameter_mismatch,
                                      "-n/-d disagree with the input file");
        }
        topes = m.types();
      }
      tropmat::MixedSubdivision s =
          tropmat::reconstruct_from_topes(topes, topes_n, topes_d);
      write_output(output, tropmat::to_json(s));
      return kOk;
    }

    if (delete_cmd->parsed() || contract_cmd->parsed()) {
      const bool deleting = delete_cmd->parsed();
      const int index = deleting ? coord - 1 : letter - 1;
      std::string text = read_file(input);
      if (detect_kind(text) == FileKind::collection) {
        tropmat::TypeCollection m = tropmat::collection_from_json(text);
        tropmat::TypeCollection out = deleting
                                          ? tropmat::tom_deletion(m, index)
                                          : tropmat::tom_contraction(m, index);
        write_output(output, tropmat::to_json(out));
      } else {
        tropmat::MixedSubdivision s = tropmat::subdivision_from_json(text);
        tropmat::MixedSubdivision out =
            deleting ? tropmat::mixsd_deletion(s, index)
                     : tropmat::mixsd_contraction(s, index);
        write_output(output, tropmat::to_json(out));
      }
      return kOk;
    }

    if (dualize_cmd->parsed()) {
      tropmat::MixedSubdivision s =
          tropmat::subdivision_from_json(read_file(input));
      tropmat::DualComplex dual(s);
      if (slice_opt->count() > 0) {
        tropmat::PseudohyperplaneSlice slice =
            tropmat::pseudohyperplane(dual, slice_index - 1);
        write_output(output, tropmat::slice_to_json(dual, slice));
      } else {
        write_output(output, tropmat::to_json(dual));
      }
      return kOk;
    }

    if (render_cmd->parsed()) {
      std::string text = read_file(input);
      tropmat::SvgScene scene;
      if (mode == "subdivision") {
        scene = tropmat::render_subdivision(
            tropmat::subdivision_from_json(text), labels);
      } else {
        scene = tropmat::render_arrangement(
            tropmat::weight_matrix_from_json(text), labels);
      }
      write_output(output, tropmat::to_svg(scene));
      return kOk;
    }
  } catch (const tropmat::TropmatError& e) {
    std::cerr << "tropmat: " << e.what() << "\n";
    return map_error(e);
  } catch (const std::exception& e) {
    std::cerr << "tropmat: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
