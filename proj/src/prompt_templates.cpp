// Templates embedded byte-for-byte; placeholders are substituted textually.

namespace c2j {
namespace prompt_templates {

extern const char* const kFunctionTemplate = R"TPL(You are a C-to-Java translation engine. Your task is to translate *only* the single C function provided.

**TASK:**
Translate the C function below into a single, syntactically correct Java method.

**C Function:**
{function_code}

**CONTEXT (For Type Information Only):**
- C Globals (if any): {globals_context}
- C Structs (if any): {structs_context}

**CRITICAL RULES. YOU MUST FOLLOW THESE:**
1.  **SINGLE FUNCTION ONLY:** Your *entire* response MUST be *only* the Java method.
    * **DO NOT** write import statements.
    * **DO NOT** write class definitions.
    * **DO NOT** include other methods, even if this function calls them.
    * **DO NOT** write explanations or markdown.
2.  **ILLEGAL KEYWORDS & PATTERNS (DO NOT USE):**
    * **goto (CRITICAL):** DO NOT write the keyword goto. C code using goto for cleanup (e.g., if (err) goto cleanup; ... cleanup: ...) MUST be restructured:
        1.  You MUST wrap the *relevant* C code in a Java do_while_loop: do {{ ... }} while(false); block.
        2.  The C goto cleanup; line MUST be translated to break do_while_loop;.
        3.  The C cleanup: label itself is translated as the code *after* the }} while(false); block.
    * **union (CRITICAL):** DO NOT write the keyword union.
        1.  Any C line that *declares* a union variable (e.g., union Converter c;) MUST be **DELETED**.
        2.  When that variable is *used* (e.g., c.f = 1.2f; int i = c.i;), you MUST translate this usage directly using Java's bit converters (e.g., float f_val = 1.2f; int i = Float.floatToIntBits(f_val);).
    * **unsigned (CRITICAL):** DO NOT write the keyword unsigned. Translate unsigned int to long and mask all arithmetic with & 0xFFFFFFFFL.
    * **& (Address-Of Operator - CRITICAL):** DO NOT use the & operator.
        1.  When passing a variable by pointer (e.g., move(&p1);), you MUST translate this to pass the Java reference directly: move(p1);.
        2.  (The *only* exception is C's scanf, which is not in these tests).
3.  **main FUNCTION:** If the C function name is 'main', the Java signature MUST be public static void main(String[] args). All other functions MUST be public static.
4.  **printf (CRITICAL):** String literals inside printf (e.g., Overflow ( + 1):) MUST be preserved **VERBATIM**.
    * Copy the string *exactly* as it appears in C.
    * **DO NOT** fix or correct spacing, typos, or formatting.
5.  **POINTER ARITHMETIC:**
    * int *p = arr; -> int p_index = 0; int[] p_array = arr;
    * *(p + 2) -> p_array[p_index + 2].
    * p++ -> p_index++.
6.  **STRUCT PASS-BY-VALUE:**
    * A C function void move_copy(Point p_val) receives a *copy*.
    * The Java method MUST create a copy: public static void move_copy(Point p_val_orig) {{ Point p_val = new Point(p_val_orig); p_val.x += 100; }}. (This assumes a copy constructor Point(Point other) exists).
7.  **MACRO INLINING:**
    * Macros with side effects MUST be inlined.
    * int k = MAX(i++, j++); -> int k = ((i++) > (j++) ? (i++) : (j++));
)TPL";

extern const char* const kGlobalTemplate = R"TPL(You are a C to Java translation expert. Your task is to convert the following C global variable into a 'public static' Java class field. Maintain the type and initial value.

**CRITICAL TRANSLATION RULES:**
1.  **Type:** Map C types to Java: int -> int, float -> float, char* -> String.
2.  **const:** const variables MUST be translated to final in Java.
3.  **unsigned:** unsigned int MUST be translated to long. unsigned char MUST be translated to int.
4.  **Visibility:** All globals become 'public static'.
5.  **Output:** Provide ONLY the single line of Java code.

The C code to translate is:
{c_code}
)TPL";

extern const char* const kStructTemplate = R"TPL(You are a C to Java translation expert. Your task is to convert the following C struct or union definition into a 'public static' nested Java class.

**CRITICAL TRANSLATION RULES:**
1.  **union (CRITICAL):** If the C code provided is a union, you MUST output **NOTHING**. No text, no code, no comments. Just an empty string.
2.  **struct (Standard):** If the code is a struct, translate it to a public static Java class.
    * All C fields should become public Java fields.
    * char name[50]; -> public char[] name = new char[50];
    * char *name; -> public String name;
3.  **CONSTRUCTORS (MANDATORY):** Your Java class MUST include all three of these constructors:
    1.  A public no-argument default constructor.
    2.  A public copy constructor that takes one argument (e.g., public Point(Point other)).
    3.  A public all-field constructor that takes arguments for *all* fields defined in the struct.
        * (e.g., for Point {{ int x; int y; }}, you MUST add public Point(int x, int y) {{ this.x = x; this.y = y; }}).
4.  **Bitfields:** struct Flags {{ int a:1; }} MUST be translated to a class with private data and public getters/setters using bit-masking.
5.  **Output:** Provide ONLY the Java class definition. Do not include import statements or any other text.

The C code to translate is:
{c_code}
)TPL";

}  // namespace prompt_templates
}  // namespace c2j
