#include <stdio.h>
#include <string.h>
#include "suzuki.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (%s)\n", #cond, suzuki_last_error()); return 1; } } while (0)

int main(void) {
    SuzukiContext *ctx = NULL;
    CHECK(suzuki_context_new(0, &ctx) == SUZUKI_STATUS_PARAMETER_DOMAIN);
    CHECK(ctx == NULL);
    CHECK(suzuki_context_new(2, &ctx) == SUZUKI_STATUS_OK);

    SuzukiParams p;
    CHECK(suzuki_params(ctx, &p) == SUZUKI_STATUS_OK);
    CHECK(p.genus == 124 && p.m_embed == 41);

    uint64_t dim = 0;
    CHECK(suzuki_dim_l(ctx, 410, &dim) == SUZUKI_STATUS_OK && dim == 287);

    uint64_t kappa = 0;
    CHECK(suzuki_kappa_rank(ctx, 3, &kappa) == SUZUKI_STATUS_OK && kappa == 5);

    char *nf = NULL;
    CHECK(suzuki_reduce(ctx, "y^2", &nf) == SUZUKI_STATUS_OK);
    CHECK(strcmp(nf, "x v + w") == 0);
    suzuki_string_free(nf);

    CHECK(suzuki_reduce(ctx, "x + z", &nf) == SUZUKI_STATUS_PARSE && nf == NULL);
    CHECK(strstr(suzuki_last_error(), "column 5") != NULL);

    suzuki_context_free(ctx);
    puts("ok");
    return 0;
}
