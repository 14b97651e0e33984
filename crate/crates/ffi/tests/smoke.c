#include <stdio.h>
#include <string.h>
#include "monodromic.h"

static int fail(const char *what) {
    const char *e = mono_last_error();
    fprintf(stderr, "%s: %s\n", what, e ? e : "(no message)");
    return 1;
}

int main(void) {
    MonoOperator *op = NULL, *image = NULL;
    if (mono_operator_parse("dx*(x-1)", MONO_ALGEBRA_LAURENT, 0, &op) != MONO_STATUS_OK) return fail("parse");
    if (mono_operator_mellin(op, &image) != MONO_STATUS_OK) return fail("mellin");
    char *text = mono_operator_to_string(image);
    int ok = strcmp(text, "-Ti*s + 1 + s") == 0;
    printf("%s\n", text);
    mono_string_free(text);
    mono_operator_free(image);
    mono_operator_free(op);
    if (!ok) return 1;

    if (mono_operator_parse("s + +", MONO_ALGEBRA_SHIFT, 0, &op) != MONO_STATUS_SYNTAX) return 1;

    MonoParams *p = mono_params_new();
    mono_params_set(p, MONO_PARAM_Q, 5);
    mono_params_set(p, MONO_PARAM_D, 1);
    MonoVerdict verdict;
    char *json = NULL;
    if (mono_check_run("keythm", p, &verdict, &json) != MONO_STATUS_OK) return fail("keythm");
    ok = verdict == MONO_VERDICT_PASS && strstr(json, "\"check\":\"keythm\"") != NULL;
    mono_string_free(json);
    mono_params_free(p);
    return ok ? 0 : 1;
}
