#include <stdio.h>
#include "ringline.h"

int main(int argc, char **argv) {
    const char *expr = argc > 1 ? argv[1] : "Z4 x Z4";
    struct RlProfile p;
    enum RlStatus status = rl_profile(expr, &p);
    if (status != RL_STATUS_OK) {
        fprintf(stderr, "error %d: %s\n", (int)status, rl_last_error());
        return 1;
    }
    printf("%llu/%llu %llu %llu %llu %llu %llu %llu %llu\n",
           (unsigned long long)p.order, (unsigned long long)p.zero_divisors,
           (unsigned long long)p.tot, (unsigned long long)p.tp_i,
           (unsigned long long)p.one_n, (unsigned long long)p.cap2n,
           (unsigned long long)p.cap3n, (unsigned long long)p.jcb,
           (unsigned long long)p.md);

    struct RlRing *ring = NULL;
    struct RlLine *line = NULL;
    if (rl_ring_new(expr, &ring) != RL_STATUS_OK || rl_line_new(ring, &line) != RL_STATUS_OK) {
        fprintf(stderr, "%s\n", rl_last_error());
        rl_ring_free(ring);
        return 1;
    }
    char *label = NULL;
    if (rl_line_point_label(line, 0, &label) == RL_STATUS_OK) {
        printf("first point %s of %zu\n", label, rl_line_point_count(line));
        rl_string_free(label);
    }
    rl_line_free(line);
    rl_ring_free(ring);
    return 0;
}
