"""Google Java style standards, condensed in our own words, with gold Checkstyle configs.

Each entry: (id, title, sentences, gold). gold is a list of (config_name,
{option: value}) pairs; an empty list means no configuration applies. Gold
values follow the Checkstyle project's own google_checks.xml where it covers the
standard.
"""

URL = "https://google.github.io/styleguide/javaguide.html"

OP_TOKENS = ("BAND, BOR, BSR, BXOR, DIV, EQUAL, GE, GT, LAND, LE, LITERAL_INSTANCEOF, LOR, "
             "LT, MINUS, MOD, NOT_EQUAL, PLUS, QUESTION, SL, SR, STAR, METHOD_REF")
LOWER_CAMEL = "^[a-z]([a-z0-9][a-zA-Z0-9]*)?$"
TYPE_VAR = "(^[A-Z][0-9]?)$|([A-Z][a-zA-Z0-9]*[T]$)"

JAVA = [
    ("java-file-name", "File name", [
        "The source file is named after the top-level class it contains, matching case, with the .java extension.",
        "Each top-level class lives in its own source file.",
    ], [("OuterTypeFilename", {}), ("OneTopLevelClass", {})]),
    ("java-file-encoding", "File encoding", [
        "Source files are encoded in UTF-8.",
    ], []),
    ("java-whitespace-characters", "Whitespace characters", [
        "Apart from the line terminator, the ASCII horizontal space is the only whitespace character allowed anywhere in a source file.",
        "Tab characters are therefore never used for indentation.",
    ], [("FileTabCharacter", {"eachLine": "true"})]),
    ("java-special-escapes", "Special escape sequences", [
        "A character with a special escape sequence, such as \\b, \\t, \\n, \\f, \\r, a quote or a backslash, is written with that sequence rather than an octal or Unicode escape.",
    ], [("IllegalTokenText", {
        "tokens": "STRING_LITERAL, CHAR_LITERAL",
        "format": "\\\\u00(09|0(a|A)|0(c|C)|0(d|D)|22|27|5(C|c))|\\\\(0(10|11|12|14|15|42|47)|134)",
    })]),
    ("java-non-ascii", "Non-ASCII characters", [
        "Other non-ASCII characters are written either as the actual Unicode character or as a Unicode escape, whichever reads better.",
        "A Unicode escape for a printable character is acceptable only when explained by a trailing comment.",
        "Escapes are fine for control and non-printable characters.",
    ], [("AvoidEscapedUnicodeCharacters", {
        "allowEscapesForControlCharacters": "true",
        "allowByTailComment": "true",
        "allowNonPrintableEscapes": "true",
    })]),
    ("java-source-file-structure", "Source file structure", [
        "A source file holds, in order, optional license or copyright information, the package statement, the import statements, and exactly one top-level class.",
        "Exactly one blank line separates each section that is present.",
    ], [("PackageDeclaration", {})]),
    ("java-license", "License or copyright information", [
        "License or copyright information, if the file needs it, goes at the very top.",
    ], []),
    ("java-package-statement", "Package statement", [
        "The package statement is never line-wrapped.",
        "The column limit does not apply to it.",
    ], [("NoLineWrap", {"tokens": "PACKAGE_DEF"})]),
    ("java-no-wildcard-imports", "No wildcard imports", [
        "Wildcard imports are not used, whether static or not.",
    ], [("AvoidStarImport", {"allowClassImports": "false", "allowStaticMemberImports": "false"})]),
    ("java-imports-no-wrap", "Import statements are not line-wrapped", [
        "Import statements are never line-wrapped.",
        "The column limit does not apply to them.",
    ], [("NoLineWrap", {"tokens": "IMPORT, STATIC_IMPORT"})]),
    ("java-import-order", "Import ordering and spacing", [
        "All static imports come first in a single block, followed by all non-static imports in a single block.",
        "When both blocks exist, one blank line separates them and no other blank lines appear between imports.",
        "Within each block the imported names appear in ASCII sort order.",
    ], [("CustomImportOrder", {
        "sortImportsInGroupAlphabetically": "true",
        "separateLineBetweenGroups": "true",
        "customImportOrderRules": "STATIC###THIRD_PARTY_PACKAGE",
    })]),
    ("java-no-static-import-classes", "No static import for classes", [
        "Static nested classes are brought in with a normal import, never with a static import.",
    ], []),
    ("java-class-member-order", "Ordering of class contents", [
        "Members and initializers of a class follow some logical order that the maintainer could explain on request.",
        "New methods are not simply appended to the end of the class by habit.",
    ], []),
    ("java-overloads", "Overloads are never split", [
        "Methods of a class that share a name appear in one contiguous group with nothing else between them.",
        "Multiple constructors are grouped the same way.",
    ], [("OverloadMethodsDeclarationOrder", {})]),
    ("java-optional-braces", "Braces are used where optional", [
        "Braces are used with if, else, for, do and while statements even when the body is empty or a single statement.",
    ], [("NeedBraces", {"tokens": "LITERAL_DO, LITERAL_ELSE, LITERAL_FOR, LITERAL_IF, LITERAL_WHILE"})]),
    ("java-nonempty-blocks", "Nonempty blocks in K&R style", [
        "Nonempty blocks and block-like constructs use Kernighan and Ritchie brace style.",
        "There is no line break before the opening brace and there is a line break after it.",
        "There is a line break before the closing brace, and after it only when it ends a statement or the body of a method, constructor or named class.",
        "For example, no break follows the brace when it is followed by else or a comma.",
    ], [("LeftCurly", {"option": "eol"}),
        ("RightCurly", {"option": "same", "tokens": "LITERAL_TRY, LITERAL_CATCH, LITERAL_FINALLY, LITERAL_IF, LITERAL_ELSE, LITERAL_DO"})]),
    ("java-empty-blocks", "Empty blocks may be concise", [
        "An empty block may be written in K&R style or closed right after it opens, as in `{}`, unless it belongs to a multi-block statement.",
    ], [("WhitespaceAround", {
        "allowEmptyConstructors": "true", "allowEmptyLambdas": "true", "allowEmptyMethods": "true",
        "allowEmptyTypes": "true", "allowEmptyLoops": "true",
    })]),
    ("java-block-indentation", "Block indentation of two spaces", [
        "Each new block or block-like construct increases the indent by two spaces, and the indent returns to the previous level when the block ends.",
        "The indent level applies to code and comments alike, so block comments sit at the same level as the surrounding code.",
    ], [("Indentation", {"basicOffset": "2", "braceAdjustment": "0", "arrayInitIndent": "2"}),
        ("CommentsIndentation", {"tokens": "SINGLE_LINE_COMMENT, BLOCK_COMMENT_BEGIN"})]),
    ("java-one-statement-per-line", "One statement per line", [
        "A line break follows every statement.",
    ], [("OneStatementPerLine", {})]),
    ("java-column-limit", "Column limit of 100", [
        "Java code has a column limit of 100 characters, and longer lines must be line-wrapped.",
        "Package and import statements, long URLs in comments and command lines in comments are exempt.",
    ], [("LineLength", {"max": "100", "ignorePattern": "^package.*|^import.*|a href|href|http://|https://|ftp://"})]),
    ("java-line-wrapping-general", "When to line-wrap", [
        "No deterministic formula says exactly how to line-wrap every statement, and several valid wrappings often exist.",
        "Wrapping is preferably done at a higher syntactic level.",
    ], []),
    ("java-break-at-operator", "Breaking at operators", [
        "When a line breaks at a non-assignment operator, the break goes before the operator symbol.",
    ], [("OperatorWrap", {"option": "nl", "tokens": OP_TOKENS})]),
    ("java-break-at-dot", "Breaking at dots and method references", [
        "When a line breaks at a dot separator or a method reference double colon, the break goes before the symbol.",
    ], [("SeparatorWrap", {"tokens": "DOT, METHOD_REF", "option": "nl"})]),
    ("java-break-at-comma", "Breaking at commas", [
        "A comma stays attached to the token before it, so a line broken at a comma breaks after the comma.",
    ], [("SeparatorWrap", {"tokens": "COMMA", "option": "eol"})]),
    ("java-method-name-paren", "Method names stay with their parenthesis", [
        "A method or constructor name stays attached to the open parenthesis that follows it.",
    ], [("MethodParamPad", {"option": "nospace"})]),
    ("java-lambda-arrow", "Lambda arrows are not broken", [
        "A line is never broken next to the arrow of a lambda, except right after the arrow when the body is a single unbraced expression.",
    ], []),
    ("java-continuation-indent", "Continuation lines", [
        "When line-wrapping, every line after the first is indented at least four spaces from the original line.",
    ], [("Indentation", {"lineWrappingIndentation": "4", "throwsIndent": "4"})]),
    ("java-vertical-whitespace", "Blank lines between members", [
        "A single blank line appears between consecutive members or initializers of a class, such as fields, constructors, methods, nested classes and initializers.",
        "Blank lines between consecutive fields are optional.",
    ], [("EmptyLineSeparator", {"allowNoEmptyLineBetweenFields": "true"})]),
    ("java-vertical-whitespace-optional", "Other blank lines", [
        "A blank line may also appear wherever it improves readability, such as between groups of statements.",
        "A blank line before the first or after the last member of a class is neither encouraged nor discouraged.",
    ], []),
    ("java-multiple-blank-lines", "Multiple blank lines", [
        "Several consecutive blank lines are permitted but never required or encouraged.",
    ], []),
    ("java-horizontal-whitespace", "Horizontal whitespace", [
        "A single space separates a reserved word such as if, for or catch from the open parenthesis that follows it.",
        "A single space also separates a reserved word such as else or catch from a closing brace before it.",
        "A single space appears on both sides of every binary or ternary operator and before every open curly brace.",
    ], [("WhitespaceAround", {"tokens": "ASSIGN, BAND, BOR, DIV, EQUAL, GE, GT, LAND, LCURLY, LE, LITERAL_CATCH, LITERAL_DO, LITERAL_ELSE, LITERAL_FINALLY, LITERAL_FOR, LITERAL_IF, LITERAL_TRY, LITERAL_WHILE, LOR, LT, MINUS, MOD, NOT_EQUAL, PLUS, QUESTION, RCURLY, STAR"})]),
    ("java-space-after-separators", "Spaces after separators", [
        "A single space follows a comma, a semicolon and the closing parenthesis of a cast.",
        "No space appears inside the angle brackets of a type parameter or argument list.",
    ], [("WhitespaceAfter", {"tokens": "COMMA, SEMI, TYPECAST"}), ("GenericWhitespace", {})]),
    ("java-no-space-before", "No space before separators", [
        "No space appears before a comma, a semicolon, a postfix increment or decrement, a dot, an ellipsis or a method reference.",
        "A line break before these tokens is still allowed where wrapping rules require it.",
    ], [("NoWhitespaceBefore", {"tokens": "COMMA, SEMI, POST_INC, POST_DEC, DOT, ELLIPSIS, METHOD_REF", "allowLineBreaks": "true"})]),
    ("java-paren-padding", "No padding inside parentheses", [
        "There is no space just inside the parentheses of a call, a declaration or an expression.",
    ], [("ParenPad", {"option": "nospace"})]),
    ("java-horizontal-alignment", "Horizontal alignment is never required", [
        "Adding spaces so that tokens line up with those on earlier lines is allowed but never required.",
        "Alignment can hurt maintainability because one change may force reformatting of many lines.",
    ], []),
    ("java-grouping-parentheses", "Grouping parentheses", [
        "Optional grouping parentheses are left out only when author and reviewer agree the code cannot reasonably be misread without them.",
    ], []),
    ("java-enum-classes", "Enum classes", [
        "A line break after the comma following an enum constant is optional.",
        "An enum with no methods and no documentation on its constants may be written like an array initializer.",
    ], []),
    ("java-variable-declarations", "Variable declarations", [
        "Each variable declaration, whether field or local, declares exactly one variable, so `int a, b;` is not used.",
        "Local variables are declared close to where they are first used rather than at the top of their block.",
    ], [("MultipleVariableDeclarations", {}), ("VariableDeclarationUsageDistance", {"allowedDistance": "3"})]),
    ("java-array-initializers", "Array initializers", [
        "An array initializer may optionally be laid out like a block-like construct.",
    ], []),
    ("java-no-c-style-arrays", "No C-style array declarations", [
        "Square brackets belong to the type and not to the variable, as in `String[] args` rather than `String args[]`.",
    ], [("ArrayTypeStyle", {"javaStyle": "true"})]),
    ("java-switch-statements", "Switch statements", [
        "The contents of a switch block are indented by two spaces, and the level rises by two more after each switch label.",
        "Each statement group either ends abruptly or carries a comment saying execution continues into the next group.",
        "Every switch statement has a default statement group, even an empty one.",
    ], [("Indentation", {"caseIndent": "2"}), ("FallThrough", {}), ("MissingSwitchDefault", {})]),
    ("java-annotations-declarations", "Annotations on classes and methods", [
        "Annotations on a class, method or constructor follow the documentation block, each on its own line.",
    ], [("AnnotationLocation", {"tokens": "CLASS_DEF, INTERFACE_DEF, ENUM_DEF, METHOD_DEF, CTOR_DEF"})]),
    ("java-annotations-fields", "Annotations on fields", [
        "Annotations on a field also follow the documentation block, but several of them may share one line.",
    ], [("AnnotationLocation", {"tokens": "VARIABLE_DEF", "allowSamelineMultipleAnnotations": "true"})]),
    ("java-type-use-annotations", "Type-use annotations", [
        "A type-use annotation appears immediately before the type it annotates.",
    ], []),
    ("java-modifiers", "Modifier order", [
        "Class and member modifiers, when present, appear in the order recommended by the Java Language Specification.",
    ], [("ModifierOrder", {})]),
    ("java-numeric-literals", "Numeric literals", [
        "Long integer literals take an uppercase L suffix and never a lowercase one, which is easily confused with the digit 1.",
    ], [("UpperEll", {})]),
    ("java-identifier-common", "Rules common to all identifiers", [
        "Identifiers use only ASCII letters and digits, plus underscores in a few cases noted below.",
        "Special prefixes and suffixes such as name_, mName or s_name are not used.",
    ], []),
    ("java-package-names", "Package names", [
        "Package names use only lowercase letters and digits with no underscores, and words are simply run together.",
    ], [("PackageName", {"format": "^[a-z]+(\\.[a-z][a-z0-9]*)*$"})]),
    ("java-class-names", "Class names", [
        "Class names are written in UpperCamelCase.",
        "They are typically nouns or noun phrases, and test classes end with Test.",
    ], [("TypeName", {"format": "^[A-Z][a-zA-Z0-9]*$"})]),
    ("java-method-names", "Method names", [
        "Method names are written in lowerCamelCase and are typically verbs or verb phrases.",
        "Underscores may appear in test method names to separate logical parts.",
    ], [("MethodName", {"format": "^[a-z][a-z0-9][a-zA-Z0-9_]*$"})]),
    ("java-constant-names", "Constant names", [
        "Constant names use UPPER_SNAKE_CASE, all capitals with words separated by single underscores.",
        "A constant is a static final field whose contents are deeply immutable.",
    ], [("ConstantName", {"format": "^[A-Z][A-Z0-9]*(_[A-Z0-9]+)*$"})]),
    ("java-field-names", "Non-constant field names", [
        "Non-constant field names, static or not, are written in lowerCamelCase.",
    ], [("MemberName", {"format": "^[a-z][a-z0-9][a-zA-Z0-9]*$"}),
        ("StaticVariableName", {"format": "^[a-z][a-z0-9][a-zA-Z0-9]*$"})]),
    ("java-parameter-names", "Parameter names", [
        "Parameter names are written in lowerCamelCase.",
        "One-character parameter names in public methods should be avoided.",
    ], [("ParameterName", {"format": LOWER_CAMEL}), ("LambdaParameterName", {"format": LOWER_CAMEL}),
        ("CatchParameterName", {"format": LOWER_CAMEL})]),
    ("java-local-variable-names", "Local variable names", [
        "Local variable names are written in lowerCamelCase.",
        "Final and immutable local variables are still not constants and are not styled as constants.",
    ], [("LocalVariableName", {"tokens": "VARIABLE_DEF", "format": LOWER_CAMEL})]),
    ("java-type-variable-names", "Type variable names", [
        "A type variable is named either with a single capital letter, optionally followed by one digit, or with a class-style name followed by a capital T.",
    ], [("ClassTypeParameterName", {"format": TYPE_VAR}), ("MethodTypeParameterName", {"format": TYPE_VAR}),
        ("InterfaceTypeParameterName", {"format": TYPE_VAR})]),
    ("java-camel-case", "Camel case defined", [
        "Camel-case names are built from the prose form of the phrase, treating acronyms as ordinary words.",
        "So XmlHttpRequest is written rather than XMLHTTPRequest.",
    ], [("AbbreviationAsWordInName", {"ignoreFinal": "false", "allowedAbbreviationLength": "1"})]),
    ("java-override", "@Override is always used", [
        "A method carries the @Override annotation whenever that is legal, including implementations of interface methods.",
    ], []),
    ("java-caught-exceptions", "Caught exceptions are not ignored", [
        "Doing nothing in response to a caught exception is very rarely correct, and when it is, a comment explains why.",
        "In tests, a caught exception may be ignored without comment if its variable is named expected.",
    ], [("EmptyCatchBlock", {"exceptionVariableName": "expected"})]),
    ("java-static-members", "Static members are qualified by class", [
        "A reference to a static member is qualified with the class name, never with an instance or expression of that type.",
    ], []),
    ("java-finalizers", "Finalizers are not used", [
        "Overriding Object.finalize is extremely rare and is not done.",
    ], [("NoFinalizer", {})]),
    ("java-javadoc-form", "General form of Javadoc", [
        "A Javadoc block is written with each line starting with an asterisk, and a block that fits on one line may use the single-line form.",
        "Javadoc comments are placed only directly before the declaration they document.",
    ], [("SingleLineJavadoc", {"ignoreInlineTags": "false"}), ("InvalidJavadocPosition", {})]),
    ("java-javadoc-paragraphs", "Javadoc paragraphs", [
        "One blank line separates Javadoc paragraphs and precedes the group of block tags.",
        "Every paragraph but the first starts with <p> placed immediately before the first word.",
    ], [("JavadocParagraph", {"allowNewlineParagraph": "false"}), ("RequireEmptyLineBeforeBlockTagGroup", {})]),
    ("java-block-tags", "Javadoc block tags", [
        "The standard block tags appear in the order @param, @return, @throws, @deprecated, and none of them has an empty description.",
        "A block tag that does not fit on one line continues with lines indented at least four spaces past the @.",
    ], [("AtclauseOrder", {"tagOrder": "@param, @return, @throws, @deprecated",
                           "target": "CLASS_DEF, INTERFACE_DEF, ENUM_DEF, METHOD_DEF, CTOR_DEF, VARIABLE_DEF"}),
        ("NonEmptyAtclauseDescription", {}),
        ("JavadocTagContinuationIndentation", {"offset": "4"})]),
    ("java-summary-fragment", "The summary fragment", [
        "Every Javadoc block starts with a short summary fragment, which is a noun or verb phrase rather than a full sentence.",
        "It does not begin with phrases like A {@code Foo} is a, This method returns, or @return the.",
    ], [("SummaryJavadoc", {"forbiddenSummaryFragments": "^@return the *|^This method returns |^A [{]@code [a-zA-Z0-9]+[}]( is a )"})]),
    ("java-javadoc-where", "Where Javadoc is used", [
        "At a minimum, Javadoc is present on every public class and on every public or protected member of such a class.",
    ], [("MissingJavadocMethod", {"scope": "public", "minLineCount": "2", "allowedAnnotations": "Override, Test"}),
        ("MissingJavadocType", {"scope": "protected"})]),
    ("java-javadoc-self-explanatory", "Self-explanatory members", [
        "Javadoc is optional for simple, obvious members such as a plain getter when nothing worthwhile remains to say.",
    ], []),
    ("java-javadoc-overrides", "Javadoc on overrides", [
        "Javadoc is not always present on a method that overrides a supertype method.",
    ], []),
    ("java-javadoc-nonrequired", "Non-required Javadoc", [
        "Other classes and members get Javadoc as needed or desired.",
        "When a comment would describe the overall purpose of a class or member, it is written as Javadoc.",
    ], []),
]
