#include <stdio.h>

#include "affine_cluster.h"

static int check(AcStatus s) {
    if (s != AC_STATUS_OK) {
        fprintf(stderr, "%s: %s\n", ac_status_message(s), ac_last_error());
        return 1;
    }
    return 0;
}

int main(void) {
    AcSequence *seq = NULL;
    AcLaurent *x = NULL;
    AcGraph *g = NULL;
    char *text = NULL;
    char *count = NULL;
    int rc = 1;

    if (check(ac_sequence_new(1, 4, &seq))) goto done;
    if (check(ac_sequence_x(seq, 7, &x))) goto done;
    if (check(ac_laurent_to_string(x, false, &text))) goto done;
    printf("x_7 = %s\n", text);

    if (check(ac_graph_build(1, 4, AC_FAMILY_STANDARD, 7, &g))) goto done;
    if (check(ac_graph_match_count(g, &count))) goto done;
    printf("G_7: %zu vertices, %s perfect matchings\n", ac_graph_vertex_count(g), count);

    if (ac_graph_build(1, 4, AC_FAMILY_STANDARD, 2, &g) == AC_STATUS_INDEX_OUT_OF_FAMILY)
        printf("G_2: %s\n", ac_last_error());
    rc = 0;

done:
    ac_string_free(count);
    ac_string_free(text);
    ac_graph_free(g);
    ac_laurent_free(x);
    ac_sequence_free(seq);
    return rc;
}
