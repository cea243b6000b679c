// Regenerates the bundled synthetic corpus under data/.

#include <iostream>

#include "synthetic_corpus.hpp"

int main(int argc, char** argv) {
    try {
        std::filesystem::path dir = argc > 1 ? argv[1] : "data";
        citekit::synth::SynthSpec spec;
        if (argc > 2) spec.shuffle_seed = static_cast<unsigned>(std::stoul(argv[2]));
        if (argc > 3) spec.records = std::stoul(argv[3]);
        if (argc > 4) spec.filler_groups = std::stoul(argv[4]);
        if (argc > 5) spec.filler_per_record = std::stoul(argv[5]);
        if (argc > 6) spec.singles_per_record = std::stoul(argv[6]);
        auto corpus = citekit::synth::build_synthetic(spec);
        citekit::synth::write_corpus_files(corpus, dir);
        std::cout << "wrote " << dir.string() << ": " << corpus.wos_file_records
                  << " WoS records, " << corpus.scopus_file_records << " Scopus records ("
                  << corpus.overlap_records << " overlapping), "
                  << corpus.total_occurrences << " cited references, "
                  << corpus.group_of_raw.size() << " distinct raw forms\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
