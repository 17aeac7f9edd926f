#ifndef MOMGRA_JOBS_HPP
#define MOMGRA_JOBS_HPP

#include <string>
#include <vector>

namespace momgra {

// One verification or query job, as assembled from the command line.
struct JobSpec {
    std::string command;  // describe | kl | bs | graph | gkm | bm | verify |
                          // scan | bound | ajs-track
    std::string type;     // e.g. "A1~"
    std::string x, y, w;
    std::string word;     // comma list or digit string
    std::string ideal;    // word or "circ"
    std::string field = "Q";
    long p = 0;
    std::vector<long> primes;
    long lmax = -1;
    int cutoff = -1;
    int jobs = 1;
    unsigned long seed = 20240501;
    std::string format = "json";  // json | dot | table
};

struct JobResult {
    int status = 0;
    std::string output;
};

JobResult run_job(const JobSpec& job);

struct MGSheaf;
// Full sheaf dump: per-vertex degree multisets, per-edge label and degrees,
// restriction matrices as polynomial strings.
std::string sheaf_json_dump(const MGSheaf& s);

}  // namespace momgra

#endif
