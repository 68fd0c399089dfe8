#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "janus/errors.hpp"
#include "janus/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"janus - derive an ontology skeleton from XML Schema files"};
  app.require_subcommand(1);

  janus::PipelineConfig config;
  std::string report = "text";
  std::string lexicon;
  std::string store;

  CLI::App* generate =
      app.add_subcommand("generate", "mine a schema corpus and emit Turtle");
  generate->add_option("paths", config.input_paths,
                       ".xsd files or directories to scan");
  generate->add_option("--out", config.output_path, "Turtle output file")
      ->capture_default_str();
  generate->add_option("--report", report, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  generate->add_option("--lexicon", lexicon, "synonym/abbreviation file")
      ->envname("JANUS_LEXICON");
  generate->add_option("--store", store, "concept store for incremental runs");
  generate->add_option("--base-iri", config.base_iri, "IRI prefix for minted entities")
      ->capture_default_str();
  generate->add_option("--label-weight", config.match.label_weight)
      ->capture_default_str();
  generate->add_option("--property-weight", config.match.property_weight)
      ->capture_default_str();
  generate->add_option("--context-weight", config.match.context_weight)
      ->capture_default_str();
  generate->add_option("--threshold", config.match.accept_threshold,
                       "similarity acceptance threshold")
      ->capture_default_str();
  generate->add_flag("--singularize", config.singularize,
                     "fold plural labels before unification");

  CLI11_PARSE(app, argc, argv);

  if (!lexicon.empty()) config.lexicon_path = lexicon;
  if (!store.empty()) config.store_path = store;
  config.report_format =
      report == "json" ? janus::ReportFormat::Json : janus::ReportFormat::Text;

  try {
    janus::PipelineResult result = janus::run_pipeline(config);
    if (config.report_format == janus::ReportFormat::Json)
      std::cout << result.summary.to_json_text();
    else
      std::cout << result.summary.to_text();
    if (!result.validation.ok())
      std::cerr << result.validation.to_text();
    return result.exit_code;
  } catch (const janus::Error& e) {
    std::cerr << "janus: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "janus: unexpected error: " << e.what() << "\n";
    return 1;
  }
}
