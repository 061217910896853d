#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "semsim/information_content.hpp"
#include "semsim/ontology_io.hpp"
#include "semsim/taxonomy.hpp"

namespace testsupport {

inline std::string data_dir() { return SEMSIM_DATA_DIR; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing test data file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline semsim::Taxonomy load_fix1() {
  return semsim::parse_taxonomy_text(read_file(data_dir() + "/fix1.tax"));
}

inline semsim::Taxonomy load_fix2() {
  return semsim::parse_taxonomy_text(read_file(data_dir() + "/fix2.tax"));
}

inline semsim::CorpusCounts load_fix_ic_counts(const semsim::Taxonomy& t) {
  return semsim::parse_corpus_counts(read_file(data_dir() + "/fix1_counts.tsv"), t);
}

inline semsim::BenchmarkDataset load_mini8() {
  return semsim::parse_pair_dataset(read_file(data_dir() + "/mini8.tsv"), "mini8");
}

}  // namespace testsupport
