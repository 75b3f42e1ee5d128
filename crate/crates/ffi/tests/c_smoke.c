#include <stdio.h>
#include <string.h>
#include "ffeis.h"

int main(void) {
    int64_t c[] = {1, -2, 2};
    FfeisLFunction *l = NULL;
    if (ffeis_lfunction_new(2, c, 3, &l) != FFEIS_STATUS_OK) return 1;
    char *a = NULL, *b = NULL;
    ffeis_degree_constant(l, 6, 2, FFEIS_ROUTE_ANALYTIC, &a);
    ffeis_degree_constant(l, 6, 2, FFEIS_ROUTE_COMBINATORIAL, &b);
    int ok = strcmp(a, "24") == 0 && strcmp(b, "24") == 0;
    ffeis_string_free(a);
    ffeis_string_free(b);
    ffeis_lfunction_free(l);

    int64_t bad[] = {1, 3, 3};
    if (ffeis_lfunction_new(2, bad, 3, &l) != FFEIS_STATUS_FUNCTIONAL_EQUATION) return 2;
    if (strstr(ffeis_last_error_message(), "L_FE_VIOLATION") == NULL) return 3;
    printf("%s\n", ok ? "ok" : "mismatch");
    return ok ? 0 : 4;
}
