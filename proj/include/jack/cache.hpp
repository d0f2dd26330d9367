#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "jack/serialize.hpp"

namespace jack {

// On-disk cache of Jack expansions: one JSON file per partition and
// normalization, written atomically (temp file then rename).
class ExpansionCache {
   public:
    explicit ExpansionCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    static std::filesystem::path default_dir() {
        if (const char* env = std::getenv("JACKLAB_CACHE_DIR")) return env;
        return std::filesystem::path(".jacklab-cache");
    }

    std::filesystem::path path_for(const Partition& la, const std::string& norm) const {
        std::string name = la.empty() ? "empty" : la.str();
        for (auto& ch : name)
            if (ch == ',') ch = '_';
        return dir_ / "jack" / norm / (name + ".json");
    }

    std::optional<SymFun> load(const Partition& la, const std::string& norm) const {
        auto p = path_for(la, norm);
        std::ifstream in(p);
        if (!in) return std::nullopt;
        try {
            json j;
            in >> j;
            return symfun_from_json(j);
        } catch (...) {
            return std::nullopt;  // unreadable entries are recomputed
        }
    }

    void store(const Partition& la, const std::string& norm, const SymFun& f) const {
        auto p = path_for(la, norm);
        std::filesystem::create_directories(p.parent_path());
        auto tmp = p;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            out << symfun_to_json(f).dump(1) << "\n";
        }
        std::filesystem::rename(tmp, p);
    }

    std::vector<std::pair<Partition, std::string>> entries() const {
        std::vector<std::pair<Partition, std::string>> out;
        auto root = dir_ / "jack";
        if (!std::filesystem::exists(root)) return out;
        for (const auto& normdir : std::filesystem::directory_iterator(root)) {
            if (!normdir.is_directory()) continue;
            for (const auto& f : std::filesystem::directory_iterator(normdir.path())) {
                if (f.path().extension() != ".json") continue;
                std::string stem = f.path().stem().string();
                if (stem == "empty") {
                    out.push_back({Partition(), normdir.path().filename().string()});
                    continue;
                }
                for (auto& ch : stem)
                    if (ch == '_') ch = ',';
                out.push_back({parse_partition(stem), normdir.path().filename().string()});
            }
        }
        return out;
    }

    const std::filesystem::path& dir() const { return dir_; }

   private:
    std::filesystem::path dir_;
};

inline const SymFun& jack_by_norm(const Partition& la, const std::string& norm) {
    if (norm == "P") return jack_p(la);
    if (norm == "Q") return jack_q(la);
    if (norm == "J") return jack_j(la);
    throw std::invalid_argument("unknown normalization " + norm);
}

inline SymFun cached_jack(const ExpansionCache& cache, const Partition& la,
                          const std::string& norm) {
    if (auto hit = cache.load(la, norm)) return *hit;
    SymFun f = jack_by_norm(la, norm);
    cache.store(la, norm, f);
    return f;
}

}  // namespace jack
