"""Google JavaScript style standards, condensed in our own words, with gold ESLint configs.

Same entry shape as standards_java. Gold values follow eslint-config-google
where it covers the standard; option "$N" is the Nth positional rule option.
"""

URL = "https://google.github.io/styleguide/jsguide.html"

JS = [
    # source file basics
    ("js-file-name", "File name", [
        "File names are all lowercase and may contain underscores or dashes but no other punctuation.",
        "The extension is .js.",
    ], []),
    ("js-file-encoding", "File encoding", [
        "Source files are encoded in UTF-8.",
    ], []),
    ("js-whitespace-characters", "Whitespace characters", [
        "Apart from the line terminator, the ASCII horizontal space is the only whitespace character in a source file.",
        "Other whitespace characters in string literals are escaped, and tab characters are not used for indentation.",
    ], [("no-tabs", {}), ("no-irregular-whitespace", {"skipStrings": "false"})]),
    ("js-non-ascii", "Non-ASCII characters", [
        "Remaining non-ASCII characters are written either as the actual character or as the equivalent hex or Unicode escape, whichever is easier to read.",
    ], []),
    # source file structure
    ("js-file-structure", "Source file structure", [
        "A file consists of, in order, license information, @fileoverview JSDoc, the goog.module statement, ES import statements, goog.require statements and the implementation.",
        "Exactly one blank line separates each section that is present, except that the implementation may be preceded by one or two.",
    ], []),
    ("js-license", "License or copyright information", [
        "License or copyright information, if present, belongs at the top of the file.",
    ], []),
    ("js-fileoverview", "@fileoverview JSDoc", [
        "A file may carry a top-level @fileoverview comment describing its contents.",
    ], []),
    ("js-goog-module", "goog.module statement", [
        "Each Closure file declares exactly one goog.module name on a single line.",
        "Lines holding goog.module declarations are never wrapped and are exempt from the column limit.",
    ], [("max-len", {"ignorePattern": "goog\\.(module|require)"})]),
    ("js-module-hierarchy", "Module hierarchy", [
        "A module namespace is never a direct child of another module's namespace.",
    ], []),
    ("js-declare-legacy-namespace", "goog.module.declareLegacyNamespace", [
        "The declareLegacyNamespace call, when used, immediately follows goog.module.",
        "It is used only as a transition aid and is avoided where possible.",
    ], []),
    ("js-import-paths", "Import paths", [
        "ES module files import other ES module files by path ending in .js.",
    ], []),
    ("js-import-names", "Naming imports", [
        "Module import names are lowerCamelCase names derived from the imported file name.",
        "Default import names follow the imported file name and the naming rules for identifiers.",
    ], []),
    ("js-named-exports", "Named vs default exports", [
        "Named exports are used in all code, and default exports are not used.",
    ], []),
    ("js-export-container-classes", "Exporting static container classes", [
        "Container classes or objects holding only static members are not exported for the sake of namespacing.",
        "Individual constants and functions are exported instead.",
    ], []),
    ("js-export-mutability", "Mutability of exports", [
        "Exported variables are never mutated outside module initialization.",
    ], []),
    ("js-export-from", "export from statements", [
        "An export from statement is not line-wrapped.",
    ], []),
    ("js-circular-deps", "Circular dependencies", [
        "Modules do not form dependency cycles, even though the ES specification permits them.",
    ], []),
    ("js-closure-interop", "Interoperating with Closure", [
        "ES modules reference Closure namespaces through goog.require rather than through a global.",
    ], []),
    ("js-set-test-only", "goog.setTestOnly", [
        "Within an ES module, goog.setTestOnly may follow the imports to mark the module as test-only.",
    ], []),
    ("js-goog-require", "goog.require statements", [
        "Imports are done with goog.require and goog.requireType statements grouped right after the module declaration.",
        "Each name placed on the left of a require ends up being a constant alias.",
    ], []),
    ("js-goog-require-order", "Ordering of requires", [
        "Standalone requires come first, then aliased requires and destructured requires, each group sorted.",
    ], []),
    ("js-no-wrap-requires", "Requires are not wrapped", [
        "A goog.require or goog.requireType statement is never line-wrapped and is exempt from the column limit.",
    ], [("max-len", {"ignorePattern": "goog\\.(module|require)"})]),
    ("js-implementation", "The file implementation", [
        "The actual implementation follows after all dependency information, separated by at least one blank line.",
    ], []),
    # formatting
    ("js-braces-control", "Braces are used for all control structures", [
        "Braces are required for all control structures like if, else, for, do and while, even when the body holds a single statement.",
        "An if statement that fits entirely on one line without wrapping may omit its braces.",
    ], [("curly", {"$1": "multi-line"})]),
    ("js-nonempty-blocks", "Nonempty blocks in K&R style", [
        "Nonempty blocks and block-like constructs follow Kernighan and Ritchie style.",
        "There is no line break before the opening brace, a line break after it, and a line break before the closing brace.",
    ], [("brace-style", {"$1": "1tbs"})]),
    ("js-empty-blocks", "Empty blocks may be concise", [
        "An empty block may be closed immediately after it opens, as in `{}`, unless it is part of a multi-block statement.",
    ], [("brace-style", {"allowSingleLine": "true"})]),
    ("js-block-indentation", "Block indentation of two spaces", [
        "Each new block or block-like construct increases the indent by two spaces.",
        "When the block ends, the indent returns to the previous level.",
    ], [("indent", {"$1": "2"})]),
    ("js-array-literals-blocklike", "Array literals may be block-like", [
        "An array literal may optionally be formatted as if it were a block.",
    ], []),
    ("js-object-literals-blocklike", "Object literals may be block-like", [
        "An object literal may optionally be formatted as if it were a block.",
    ], []),
    ("js-function-expressions", "Function expressions", [
        "When an anonymous function is declared among the arguments of a call, its body is indented two spaces more than the preceding indentation depth.",
    ], [("indent", {"FunctionExpression": "{\"body\": 1, \"parameters\": 2}"})]),
    ("js-switch-indentation", "Switch statements", [
        "The contents of a switch block are indented two spaces, and the level rises by two more after each case label.",
        "A blank line between case groups is optional.",
    ], [("indent", {"SwitchCase": "1"})]),
    ("js-one-statement-per-line", "One statement per line", [
        "Each statement is followed by a line break.",
    ], [("max-statements-per-line", {"max": "1"})]),
    ("js-semicolons", "Semicolons are required", [
        "Every statement ends with a semicolon, and automatic semicolon insertion is never relied on.",
    ], [("semi", {"$1": "always"})]),
    ("js-column-limit", "Column limit of 80", [
        "JavaScript code has a column limit of 80 characters.",
        "Lines that cannot be broken, such as long URLs in comments, goog.module and goog.require statements, may exceed it.",
    ], [("max-len", {"code": "80", "ignoreUrls": "true", "ignorePattern": "goog\\.(module|require)"})]),
    ("js-line-wrapping", "Line-wrapping", [
        "No formula says exactly how to wrap every line, and several valid wrappings often exist.",
        "Wrapping prefers breaking at a higher syntactic level.",
    ], []),
    ("js-break-at-operators", "Breaking at operators", [
        "When a line breaks at an operator, the break comes after the operator symbol.",
        "This differs from the convention used in Java.",
    ], [("operator-linebreak", {"$1": "after"})]),
    ("js-break-dot", "Breaking at the dot", [
        "The dot member-access operator is the exception and the break comes before it.",
    ], [("dot-location", {"$1": "property"})]),
    ("js-method-name-paren", "Method names stay with their parenthesis", [
        "A method or constructor name stays attached to the open parenthesis that follows it.",
    ], [("func-call-spacing", {"$1": "never"})]),
    ("js-comma-attached", "Commas stay attached", [
        "A comma stays attached to the token that precedes it.",
    ], [("comma-style", {"$1": "last"})]),
    ("js-continuation-indent", "Continuation lines", [
        "When line-wrapping, each line after the first is indented at least four spaces from the original line.",
    ], [("indent", {"CallExpression": "{\"arguments\": 2}", "MemberExpression": "2"})]),
    ("js-vertical-whitespace", "Vertical whitespace", [
        "A single blank line appears between consecutive methods in a class or object literal and within method bodies to create logical groupings.",
        "Blank lines at the start or end of a function body are not allowed, and multiple consecutive blank lines are permitted but never required.",
    ], [("padded-blocks", {"$1": "never"}), ("no-multiple-empty-lines", {"max": "2"})]),
    ("js-space-keywords", "Spaces around reserved words", [
        "A space separates any reserved word such as if, for or catch from an open parenthesis that follows it on that line.",
        "A space separates any reserved word such as else or catch from a closing brace that precedes it on that line.",
    ], [("keyword-spacing", {"before": "true", "after": "true"})]),
    ("js-space-before-brace", "Space before an open brace", [
        "A space precedes any open curly brace, except for a template expansion or when the brace appears directly inside parentheses or brackets.",
    ], [("space-before-blocks", {"$1": "always"})]),
    ("js-space-binary-operators", "Spaces around operators", [
        "A space appears on both sides of any binary or ternary operator.",
    ], [("space-infix-ops", {"int32Hint": "false"})]),
    ("js-space-comma-semicolon", "Spaces after commas and semicolons", [
        "A space follows a comma or semicolon, and no space precedes either.",
    ], [("comma-spacing", {"before": "false", "after": "true"}), ("semi-spacing", {"before": "false", "after": "true"})]),
    ("js-space-object-colon", "Spaces after colons in object literals", [
        "A space follows the colon in an object literal and no space precedes it.",
    ], [("key-spacing", {"beforeColon": "false", "afterColon": "true"})]),
    ("js-space-comments", "Spaces around comments", [
        "A space appears on both sides of the double slash that begins an end-of-line comment.",
    ], [("spaced-comment", {"$1": "always"})]),
    ("js-trailing-whitespace", "Trailing whitespace", [
        "Lines never end with trailing whitespace, and runs of several spaces are not used for alignment inside code.",
    ], [("no-trailing-spaces", {"skipBlankLines": "false"}), ("no-multi-spaces", {})]),
    ("js-space-brackets", "No padding inside brackets", [
        "No space appears just inside the brackets of an array literal or a computed property access.",
    ], [("array-bracket-spacing", {"$1": "never"}), ("computed-property-spacing", {"$1": "never"})]),
    ("js-horizontal-alignment", "Horizontal alignment is discouraged", [
        "Horizontal alignment is permitted but generally discouraged.",
        "An existing alignment may be kept when the surrounding code is not touched.",
    ], []),
    ("js-function-arguments", "Function arguments", [
        "Function arguments preferably all fit on the same line as the function name.",
        "When they do not, they are wrapped in a readable way.",
    ], []),
    ("js-grouping-parentheses", "Grouping parentheses", [
        "Optional grouping parentheses are omitted only when author and reviewer agree that the code cannot reasonably be misread without them.",
        "Parentheses are not used around the entire expression after delete, typeof, void, return, throw, case, in, of or yield.",
    ], []),
    ("js-block-comment-style", "Block comment style", [
        "Block comments are indented at the same level as the surrounding code.",
        "They may use /* */ or // style, and multi-line /* */ comments start each subsequent line with an aligned asterisk.",
    ], []),
    ("js-parameter-comments", "Parameter name comments", [
        "Parameter name comments are used when the value and method name do not convey the meaning of an argument.",
    ], []),
    # language features
    ("js-use-const-let", "Use const and let", [
        "All local variables are declared with either const or let, using const by default unless a variable needs to be reassigned.",
        "The var keyword is not used.",
    ], [("no-var", {}), ("prefer-const", {"destructuring": "all"})]),
    ("js-one-variable-per-declaration", "One variable per declaration", [
        "Every local variable declaration declares only one variable, so `let a = 1, b = 2;` is not used.",
    ], [("one-var", {"var": "never", "let": "never", "const": "never"})]),
    ("js-declared-when-needed", "Declared when needed", [
        "Local variables are not habitually declared at the start of their block but close to their first use.",
    ], []),
    ("js-declare-types", "Declare types as needed", [
        "JSDoc type annotations may be added on the line above a declaration or inline before the variable name.",
    ], []),
    ("js-array-trailing-commas", "Trailing commas in arrays", [
        "A trailing comma is included whenever a line break separates the final element and the closing bracket.",
    ], [("comma-dangle", {"arrays": "always-multiline"})]),
    ("js-array-constructor", "No variadic Array constructor", [
        "The Array constructor is not used to build arrays because its behavior with a single argument is error-prone.",
        "Array literals are used instead.",
    ], [("no-array-constructor", {})]),
    ("js-array-non-numeric", "Non-numeric properties on arrays", [
        "Arrays do not get properties other than length, and a Map or Object is used instead.",
    ], []),
    ("js-array-destructuring", "Array destructuring", [
        "Array literals may appear on the left of an assignment to unpack several values.",
        "A final rest element may be included with no space between the dots and the name.",
    ], [("rest-spread-spacing", {"$1": "never"})]),
    ("js-array-spread", "Spread operator on arrays", [
        "Array literals may include the spread operator to flatten elements out of iterables.",
        "It is preferred over constructs built on Array.prototype and apply.",
    ], [("prefer-spread", {})]),
    ("js-object-trailing-commas", "Trailing commas in objects", [
        "A trailing comma is included whenever a line break separates the final property and the closing brace.",
    ], [("comma-dangle", {"objects": "always-multiline"})]),
    ("js-object-constructor", "No Object constructor", [
        "The Object constructor is not used, and an object literal is written instead.",
    ], [("no-new-object", {})]),
    ("js-quoted-keys", "Do not mix quoted and unquoted keys", [
        "Object literals either use only unquoted symbol keys or only quoted string keys, never a mix of the two.",
    ], [("quote-props", {"$1": "consistent"})]),
    ("js-computed-property-names", "Computed property names", [
        "Computed property names are allowed and are treated as dict-style quoted keys.",
    ], []),
    ("js-method-shorthand", "Method shorthand", [
        "Methods on object literals may be defined with the method shorthand in place of a colon followed by a function literal.",
    ], []),
    ("js-shorthand-properties", "Shorthand properties", [
        "Shorthand properties are allowed on object literals.",
    ], []),
    ("js-object-destructuring", "Object destructuring", [
        "Object destructuring may appear on the left of an assignment to unpack several values from one object.",
        "Destructured parameters are kept simple, with a single level of unquoted shorthand properties.",
    ], []),
    ("js-enums", "Enums", [
        "Enumerations are defined by adding the @enum annotation to an object literal, and no properties are added afterward.",
        "Enums are constant and their values are immutable.",
    ], []),
    ("js-constructors", "Constructors", [
        "Constructors are optional, but a subclass constructor calls super before setting any fields or touching this.",
    ], [("constructor-super", {}), ("no-this-before-super", {})]),
    ("js-class-fields", "Fields", [
        "All fields of a concrete object are set in the constructor, and fields that are never reassigned carry @const.",
    ], []),
    ("js-computed-class-properties", "Computed class properties", [
        "Computed properties in classes may only be symbols, and dict-style properties are not allowed.",
    ], []),
    ("js-static-methods", "Static methods", [
        "Module-local functions are preferred over private static methods where readability is not harmed.",
        "Static methods are called only on the base class itself.",
    ], []),
    ("js-old-style-classes", "Old-style class declarations", [
        "ES6 classes are preferred, but old-style constructor functions remain acceptable where needed.",
    ], []),
    ("js-prototype-manipulation", "Prototypes are not manipulated directly", [
        "The class keyword gives clearer class definitions than defining prototype properties.",
        "Built-in prototypes are never modified.",
    ], [("no-extend-native", {})]),
    ("js-getters-setters", "Getters and setters", [
        "JavaScript getter and setter properties are not used, and ordinary methods are written instead.",
    ], []),
    ("js-tostring", "Overriding toString", [
        "The toString method may be overridden, but it must always succeed and never have visible side effects.",
    ], []),
    ("js-interfaces", "Interfaces", [
        "Interfaces are declared with @interface or @record, and their methods have empty bodies.",
    ], []),
    ("js-abstract-classes", "Abstract classes", [
        "Abstract classes are used when appropriate, and abstract methods have empty bodies.",
    ], []),
    ("js-top-level-functions", "Top-level functions", [
        "Top-level functions may be defined directly on the exports object or declared locally and exported afterward.",
    ], []),
    ("js-nested-functions", "Nested functions and closures", [
        "Functions may contain nested function definitions, which may be given a const name.",
    ], []),
    ("js-arrow-functions", "Arrow functions", [
        "Arrow functions give concise anonymous function syntax and remove the need to rebind this.",
        "Arrow functions are preferred over the function keyword for nested functions, and their parameters are always wrapped in parentheses.",
    ], [("prefer-arrow-callback", {}), ("arrow-parens", {"$1": "always"})]),
    ("js-generators", "Generators", [
        "Generators attach the star to the function keyword and separate it from the name with a space.",
        "When delegating with yield, the star is attached to the yield keyword.",
    ], [("generator-star-spacing", {"$1": "after"}), ("yield-star-spacing", {"$1": "after"})]),
    ("js-parameter-types", "Parameter and return types", [
        "Function parameters and return types are documented with JSDoc annotations.",
    ], []),
    ("js-rest-parameters", "Rest parameters", [
        "A rest parameter is used instead of accessing arguments.",
        "No space appears between the three dots and the parameter name.",
    ], [("prefer-rest-params", {}), ("rest-spread-spacing", {"$1": "never"})]),
    ("js-generic-types", "Generics", [
        "Generic functions and methods declare their type parameters with @template in the JSDoc above them.",
    ], []),
    ("js-single-quotes", "Use single quotes", [
        "Ordinary string literals are delimited with single quotes rather than double quotes.",
        "A string containing a single quote may use a template literal to avoid escaping.",
    ], [("quotes", {"$1": "single", "allowTemplateLiterals": "true"})]),
    ("js-template-literals", "Template literals", [
        "Template literals are used instead of complex string concatenation, particularly when several string literals are involved.",
    ], [("prefer-template", {})]),
    ("js-no-line-continuations", "No line continuations", [
        "A string literal never continues onto the next line with a backslash, in ordinary or template strings.",
    ], [("no-multi-str", {})]),
    ("js-for-loops", "For loops", [
        "The for-of loop is preferred when possible.",
        "A for-in loop is used only on dict-style objects and always filters with hasOwnProperty.",
    ], [("guard-for-in", {})]),
    ("js-exceptions", "Exceptions", [
        "Only Error objects or subclasses of Error are thrown, never string or other literals.",
        "Promises are likewise rejected only with Error values.",
    ], [("no-throw-literal", {}), ("prefer-promise-reject-errors", {})]),
    ("js-custom-exceptions", "Custom exceptions", [
        "Custom exception types give a way to convey additional error information and may be defined where needed.",
    ], []),
    ("js-empty-catch", "Empty catch blocks", [
        "Doing nothing in response to a caught exception is very rarely correct.",
        "When it truly is appropriate, a comment in the catch block explains why.",
    ], [("no-empty", {"allowEmptyCatch": "false"})]),
    ("js-switch-fall-through", "Fall-through is commented", [
        "Within a switch block, each statement group either terminates abruptly or is marked with a comment saying execution continues into the next group.",
    ], [("no-fallthrough", {"commentPattern": "falls?\\s?through"})]),
    ("js-switch-default", "The default case is present", [
        "Each switch statement includes a default statement group, even if it contains no code, and that group comes last.",
    ], [("default-case", {}), ("default-case-last", {})]),
    ("js-this", "Uses of this", [
        "The this keyword is used only in class constructors and methods, in arrow functions defined within them, and in functions with an explicit @this.",
    ], [("no-invalid-this", {})]),
    ("js-equality", "Equality checks", [
        "Identity operators === and !== are used except in the comparison to null, which may use == to catch both null and undefined.",
    ], [("eqeqeq", {"$1": "always", "null": "ignore"})]),
    ("js-with", "No with statement", [
        "The with keyword is never used.",
    ], [("no-with", {})]),
    ("js-dynamic-code", "No dynamic code evaluation", [
        "Neither eval nor the Function constructor is used, except in code loaders.",
    ], [("no-eval", {}), ("no-new-func", {}), ("no-implied-eval", {})]),
    ("js-asi", "No automatic semicolon insertion", [
        "Statements are always terminated with semicolons rather than relying on automatic insertion.",
    ], [("semi", {"$1": "always"})]),
    ("js-non-standard-features", "Non-standard features", [
        "Non-standard language features and browser-specific APIs are avoided unless the project explicitly targets them.",
    ], []),
    ("js-wrapper-objects", "No wrapper objects for primitives", [
        "The wrappers Boolean, Number, String and Symbol are never invoked with new.",
    ], [("no-new-wrappers", {}), ("no-new-symbol", {})]),
    ("js-modifying-builtins", "Built-in objects are not modified", [
        "Built-in types are never modified by adding methods to their constructors or prototypes.",
        "Fields are also not added to the global object unless absolutely necessary.",
    ], [("no-extend-native", {}), ("no-global-assign", {})]),
    ("js-constructor-parens", "Parentheses on constructor calls", [
        "Constructors are always invoked with parentheses, so new Foo is not written in place of new Foo().",
    ], [("new-parens", {"$1": "always"})]),
    ("js-debugger", "No debugger statements", [
        "Production code contains no debugger statements.",
    ], []),
    # naming
    ("js-identifier-common", "Rules common to all identifiers", [
        "Identifiers use only ASCII letters and digits and, in a small number of cases, underscores or a dollar sign.",
        "Names are as descriptive as possible within reason, and ambiguous abbreviations are avoided.",
    ], []),
    ("js-package-names", "Package names", [
        "Package names are all lowerCamelCase.",
    ], []),
    ("js-class-names", "Class names", [
        "Class, interface, record and typedef names are written in UpperCamelCase.",
        "Constructors are invoked only through names starting with a capital letter.",
    ], [("new-cap", {"newIsCap": "true", "capIsNew": "false"})]),
    ("js-method-names", "Method names", [
        "Method names are written in lowerCamelCase, and private methods end with a trailing underscore.",
    ], []),
    ("js-enum-names", "Enum names", [
        "Enum names are written in UpperCamelCase and are generally singular nouns, while individual items use CONSTANT_CASE.",
    ], []),
    ("js-constant-names", "Constant names", [
        "Constant names use CONSTANT_CASE, all uppercase letters with words separated by underscores.",
        "A constant is a deeply immutable static property or module-local const.",
    ], []),
    ("js-non-constant-field-names", "Non-constant field names", [
        "Non-constant field names, static or otherwise, are written in lowerCamelCase, with a trailing underscore for private fields.",
    ], []),
    ("js-parameter-names", "Parameter names", [
        "Parameter names are written in lowerCamelCase, even when the parameter expects a constructor.",
    ], []),
    ("js-local-variable-names", "Local variable names", [
        "Local variable names are written in lowerCamelCase, except for module-local constants.",
    ], []),
    ("js-template-parameter-names", "Template parameter names", [
        "Template parameter names are concise single-word or single-letter identifiers in all caps, such as TYPE or THIS.",
    ], []),
    ("js-module-local-names", "Module-local names", [
        "Module-local names that are not exported are implicitly private and are not marked @private.",
    ], []),
    ("js-camel-case", "Camel case defined", [
        "Camel-case names are built from the prose form of a phrase, with acronyms treated as ordinary words.",
        "Object property names are not required to follow camel case.",
    ], [("camelcase", {"properties": "never"})]),
    # JSDoc
    ("js-jsdoc-general-form", "General form of JSDoc", [
        "JSDoc comments start with a slash and two asterisks, and each following line starts with an aligned asterisk.",
    ], []),
    ("js-jsdoc-markdown", "Markdown in JSDoc", [
        "JSDoc is written in Markdown and may include HTML when necessary.",
    ], []),
    ("js-jsdoc-tags", "JSDoc tags", [
        "Google style allows a subset of JSDoc tags, and most tags occupy their own line.",
    ], []),
    ("js-jsdoc-line-wrapping", "Line-wrapping block tags", [
        "Wrapped block tags are indented four spaces, while wrapped description text is not indented.",
    ], []),
    ("js-jsdoc-file-comments", "Top and file-level comments", [
        "A file may have a top-level overview that describes its contents and dependencies or compatibility information.",
    ], []),
    ("js-jsdoc-class-comments", "Class comments", [
        "Classes, interfaces and records are documented with a description and any template parameters.",
    ], [("require-jsdoc", {"require": "{\"ClassDeclaration\": true}"})]),
    ("js-jsdoc-enum-typedef", "Enum and typedef comments", [
        "All enums and typedefs are documented with suitable JSDoc tags preceding the next line.",
    ], []),
    ("js-jsdoc-functions", "Method and function comments", [
        "Parameter and return types are documented for methods and named functions.",
        "The @return tag is written as @return, and descriptions of parameters and returns may be omitted when obvious from the signature.",
    ], [("require-jsdoc", {"require": "{\"FunctionDeclaration\": true, \"MethodDefinition\": true}"}),
        ("valid-jsdoc", {"requireParamDescription": "false", "requireReturnDescription": "false",
                         "requireReturn": "false", "prefer": "{\"returns\": \"return\"}"})]),
    ("js-jsdoc-property-comments", "Property comments", [
        "Property types are documented, and the description may be omitted for private properties whose name explains them.",
    ], []),
    ("js-jsdoc-type-annotations", "Type annotations", [
        "Type annotations appear in @param, @return, @this and @type tags, and optionally on @const and @export.",
    ], []),
    ("js-jsdoc-nullability", "Nullability", [
        "Type annotations state nullability explicitly with the ? and ! operators for reference types.",
    ], []),
    ("js-jsdoc-type-casts", "Type casts", [
        "A type cast adds a @type annotation to a parenthesized expression.",
    ], []),
    ("js-jsdoc-template-types", "Template parameter types", [
        "Template parameters are always specified, even when the meaning of an unspecified type would be clear.",
    ], []),
    ("js-jsdoc-function-types", "Function type expressions", [
        "In a function type expression, a space never follows the colon in function return types or parameter lists.",
    ], []),
    ("js-jsdoc-whitespace", "Whitespace in type annotations", [
        "Within a type annotation, a single space or line break follows each comma or colon, and no other whitespace is added.",
    ], []),
    ("js-jsdoc-visibility", "Visibility annotations", [
        "Visibility annotations like @private, @package and @protected may appear in a @fileoverview block or on any exported symbol or property.",
    ], []),
    ("js-jsdoc-deprecated", "Deprecation", [
        "Deprecated methods, classes and interfaces are marked with @deprecated together with directions for the replacement.",
    ], []),
    # policies
    ("js-unspecified-issues", "Issues not specified by the guide", [
        "For any style question not settled by these rules, follow what the other code in the same file already does.",
        "If that does not resolve it, consider emulating the other files in the same package.",
    ], []),
    ("js-compiler-warnings", "Compiler warnings", [
        "Projects use the standard warning set from the compiler.",
    ], []),
    ("js-handle-warnings", "Handling warnings", [
        "Before doing anything about a compiler warning, understand exactly what it is saying.",
        "Then fix the issue or work around it, and suppress the warning only as a last resort.",
    ], []),
    ("js-suppress-warnings", "Suppressing warnings", [
        "Warning suppression is placed at the narrowest reasonable scope, usually a single local variable or very small method.",
    ], []),
    ("js-deprecation-policy", "Deprecation policy", [
        "Deprecated code is marked with @deprecated annotations and includes instructions to migrate away from it.",
    ], []),
    ("js-non-google-style", "Code not in Google style", [
        "Existing code that does not follow the guide is reformatted only when it is otherwise being modified substantially.",
    ], []),
    ("js-new-code", "Newly added code", [
        "Brand new files use Google style regardless of the style of other files in the same package.",
    ], []),
    ("js-reformatting", "Reformatting existing code", [
        "When updating the style of existing code, a separate change does the reformatting alone.",
    ], []),
    ("js-local-style-rules", "Local style rules", [
        "Teams and projects may adopt additional style rules beyond those in this document.",
        "Cleanup changes must still respect those rules.",
    ], []),
    ("js-generated-code", "Generated code", [
        "Source code generated by the build process is not required to be in Google style.",
        "Generated identifiers referenced from hand-written code still follow the naming requirements.",
    ], []),
    # appendices and misunderstood rules
    ("js-event-handlers", "Event handlers", [
        "Event handlers defined as arrow functions are assigned to fields when they must later be removed.",
    ], []),
    ("js-typedefs", "Typedefs", [
        "Typedefs are useful for defining short record types or aliases for unions and complicated types.",
    ], []),
    ("js-records", "Records", [
        "Record types declared with @record describe structural interfaces for plain objects.",
    ], []),
]
