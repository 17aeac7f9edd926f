#include <CLI11.hpp>

#include <iostream>

#include "momgra/jobs.hpp"

int main(int argc, char** argv) {
    CLI::App app{"momgra: exact computations on affine moment graphs"};
    app.require_subcommand(1);

    momgra::JobSpec job;
    std::string primes_csv;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--type", job.type, "root system, e.g. A1~ or A2~")->required();
        sub->add_option("--field", job.field, "Q or Fp");
        sub->add_option("--p", job.p, "prime for --field Fp");
        sub->add_option("--cutoff", job.cutoff, "degree cutoff override");
        sub->add_option("--seed", job.seed, "seed for randomized runs");
        sub->add_option("--jobs", job.jobs, "worker pool size");
        sub->add_option("--format", job.format, "json, dot or table");
    };

    CLI::App* describe = app.add_subcommand("describe", "root datum summary");
    add_common(describe);

    CLI::App* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial h_{x,y}");
    add_common(kl);
    kl->add_option("--x", job.x, "lower element word");
    kl->add_option("--y", job.y, "upper element word")->required();

    CLI::App* bs = app.add_subcommand("bs", "Bott-Samelson element of the Hecke algebra");
    add_common(bs);
    bs->add_option("--word", job.word, "comma list of generator indices")->required();

    CLI::App* graph = app.add_subcommand("graph", "moment graph on a Bruhat ideal");
    add_common(graph);
    graph->add_option("--ideal", job.ideal, "ideal word, or 'circ'");
    graph->add_option("--w", job.w, "ideal top element");

    CLI::App* gkm = app.add_subcommand("gkm", "exceptional primes of a subgraph");
    add_common(gkm);
    gkm->add_option("--ideal", job.ideal, "ideal word, or 'circ'");
    gkm->add_option("--w", job.w, "ideal top element");

    CLI::App* bm = app.add_subcommand("bm", "canonical sheaf stalks vs KL values");
    add_common(bm);
    bm->add_option("--w", job.w, "top element word")->required();

    CLI::App* verify = app.add_subcommand("verify", "stalk-rank verification campaign");
    add_common(verify);
    verify->add_option("--w", job.w, "single top element");
    verify->add_option("--lmax", job.lmax, "all tops of length <= lmax");

    CLI::App* scan = app.add_subcommand("scan", "compare F_p stalk ranks with Q");
    add_common(scan);
    scan->add_option("--w", job.w, "top element word")->required();
    scan->add_option("--primes", primes_csv, "comma list of primes")->required();

    CLI::App* bound = app.add_subcommand("bound", "the explicit bound U");
    add_common(bound);
    bound->add_option("--word", job.word, "generator word");
    bound->add_option("--w", job.w, "minimize over reduced words of w");

    CLI::App* ajs = app.add_subcommand("ajs-track", "translation track vs sheaf stalks");
    add_common(ajs);
    ajs->add_option("--word", job.word, "generator word")->required();

    CLI11_PARSE(app, argc, argv);

    job.command = app.get_subcommands().front()->get_name();
    if (!primes_csv.empty()) {
        size_t pos = 0;
        while (pos < primes_csv.size()) {
            size_t comma = primes_csv.find(',', pos);
            if (comma == std::string::npos) comma = primes_csv.size();
            job.primes.push_back(std::stol(primes_csv.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    }

    try {
        momgra::JobResult r = momgra::run_job(job);
        std::cout << r.output;
        return r.status;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
