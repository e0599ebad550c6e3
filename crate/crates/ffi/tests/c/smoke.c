#include <stdio.h>
#include <string.h>
#include "hmds.h"

#define CHECK(expr) do { if (!(expr)) { fprintf(stderr, "failed: %s (%s)\n", #expr, hmds_last_error()); return 1; } } while (0)

int main(void) {
    HmdsCode *code = NULL;
    bool flag = false;
    size_t n = 0, k = 0;
    char *witness = NULL;

    CHECK(hmds_code_fixture("gf7_8_4", &code) == HMDS_STATUS_OK);
    CHECK(hmds_code_dimensions(code, &n, &k) == HMDS_STATUS_OK && n == 8 && k == 4);
    CHECK(hmds_is_2mds(code, HMDS_METHOD_DET, &flag, NULL) == HMDS_STATUS_OK && flag);
    CHECK(hmds_is_2mds(code, HMDS_METHOD_PUNCTURE, &flag, &witness) == HMDS_STATUS_OK && !flag);
    CHECK(witness != NULL && strstr(witness, "kind") != NULL);
    hmds_string_free(witness);
    hmds_code_free(code);

    CHECK(hmds_code_from_json("[", &code) == HMDS_STATUS_PARSE);
    CHECK(strlen(hmds_last_error()) > 0);

    printf("ok %s\n", hmds_version());
    return 0;
}
